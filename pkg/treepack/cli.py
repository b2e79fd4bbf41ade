import argparse
import json
import logging
import sys

from .corpus import DEFAULT_CORPUS_SIZE, DEFAULT_SEED
from .exceptions import BudgetExceeded, GraphError, GraphFormatError, SimulationError, UnsupportedError
from .families import ALL_FAMILY_TAGS, ChordSpec, FamilySpec, build_family
from .graph import blocks_by_component
from .graphio import format_graph, format_records, load_graph, solution_record
from .heuristics import pack_t1, pack_t2
from .oracle import Budget, PackingSolution, check_packing, max_packing, min_cover, validate_solution
from .reproduce import run_reproduction
from .simulation import run_block_detection

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_HARD_FAILURE = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3


def _chord(text):
    try:
        start, end, length = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Chord must be 'start,end,length', got {text!r}.")
    return ChordSpec(start, end, length)


def _add_budget(parser):
    parser.add_argument("--budget-embeddings", type=int, default=Budget.MAX_EMBEDDINGS)
    parser.add_argument("--budget-nodes", type=int, default=Budget.MAX_NODES)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="treepack",
        description="Packing and covering of perfect binary trees T_k.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbs = parser.add_subparsers(dest="verb", required=True)

    generate = verbs.add_parser("generate", help="write a family instance as a graph file")
    generate.add_argument("family", choices=ALL_FAMILY_TAGS)
    generate.add_argument("--r", type=int, default=1)
    generate.add_argument("--h", type=int, default=0)
    generate.add_argument("--i", type=int, default=0, help="attachment index of erdos_posa paths")
    generate.add_argument("--chord", type=_chord, action="append", default=[], help="start,end,length")
    generate.add_argument("--output")

    pack = verbs.add_parser("pack", help="pack vertex-disjoint copies of T_k")
    pack.add_argument("graph")
    pack.add_argument("--k", type=int, default=1)
    pack.add_argument("--mode", choices=("heuristic", "oracle"), default="oracle")
    _add_budget(pack)
    pack.add_argument("--output")

    cover = verbs.add_parser("cover", help="minimum vertex set meeting every T_k")
    cover.add_argument("graph")
    cover.add_argument("--k", type=int, default=1)
    _add_budget(cover)
    cover.add_argument("--output")

    blocks = verbs.add_parser("blocks", help="block decomposition")
    blocks.add_argument("graph")
    blocks.add_argument("--method", choices=("reference", "protocol"), default="reference")
    blocks.add_argument("--output")

    simulate = verbs.add_parser("simulate", help="run the block detection protocol")
    simulate.add_argument("graph")
    simulate.add_argument("--trace", help="write one JSON line per (round, vertex)")
    simulate.add_argument("--verified", action="store_true")
    simulate.add_argument("--early-stop", action="store_true")
    simulate.add_argument("--output")

    reproduce = verbs.add_parser("reproduce", help="recompute every quoted claim")
    reproduce.add_argument("--seed", type=int, default=DEFAULT_SEED)
    reproduce.add_argument("--corpus-size", type=int, default=DEFAULT_CORPUS_SIZE)
    reproduce.add_argument("--table", action="store_true")
    reproduce.add_argument("--timings", action="store_true")
    _add_budget(reproduce)
    reproduce.add_argument("--output")

    return parser


#######################################
## verbs
#######################################
def cmd_generate(args):
    spec = FamilySpec(args.family, r=args.r, chords=tuple(args.chord), h=args.h, attach_index=args.i)
    return format_graph(build_family(spec)), EXIT_OK


def cmd_pack(args):
    g = load_graph(args.graph)
    if args.mode == "heuristic":
        if args.k == 1:
            solution = pack_t1(g)
        elif args.k == 2:
            solution = pack_t2(g)
        else:
            raise UnsupportedError(f"Heuristic packing supports k in (1, 2), got k={args.k}.")
    else:
        solution = max_packing(g, args.k, _budget(args))

    problems = check_packing(g, args.k, solution)
    for problem in problems:
        logger.error("Invalid packing: %s.", problem)
    code = EXIT_HARD_FAILURE if problems else EXIT_OK
    return format_records([solution_record(solution, valid=not problems)]), code


def cmd_cover(args):
    g = load_graph(args.graph)
    budget = _budget(args)
    solution = min_cover(g, args.k, budget)
    report = validate_solution(g, args.k, PackingSolution(args.k), solution, budget)
    return format_records([solution_record(solution, valid=report.cover_valid)]), EXIT_OK


def cmd_blocks(args):
    g = load_graph(args.graph)
    decomposition = blocks_by_component(g, method=args.method)
    return format_records(_decomposition_records(decomposition)), EXIT_OK


def cmd_simulate(args):
    g = load_graph(args.graph)

    trace_file = open(args.trace, "w", encoding="ascii") if args.trace else None
    try:
        trace = None
        if trace_file is not None:
            def trace(round_number, table):
                trace_file.write(json.dumps(dict(round=round_number, **table.as_record())) + "\n")

        decomposition, state = run_block_detection(
            g, verified=args.verified, early_stop=args.early_stop, trace=trace
        )
    finally:
        if trace_file is not None:
            trace_file.close()

    summary = [("rounds", state.round), ("limitations", len(state.limitations))]
    summary.extend(("x_row", [int(x) for x in row]) for row in state.x_matrix)
    return format_records([summary] + _decomposition_records(decomposition)), EXIT_OK


def cmd_reproduce(args):
    report = run_reproduction(seed=args.seed, corpus_size=args.corpus_size, budget=_budget(args))
    code = EXIT_HARD_FAILURE if report.hard_failures else EXIT_OK
    return report.render(timings=args.timings, table=args.table), code


COMMANDS = dict(
    generate=cmd_generate,
    pack=cmd_pack,
    cover=cmd_cover,
    blocks=cmd_blocks,
    simulate=cmd_simulate,
    reproduce=cmd_reproduce,
)


def _budget(args):
    return Budget(max_embeddings=args.budget_embeddings, max_nodes=args.budget_nodes)


def _decomposition_records(decomposition):
    records = [[("block", index), ("vertices", sorted(block))] for index, block in enumerate(decomposition.blocks)]
    for path in decomposition.paths:
        records.append([
            ("path", " ".join("-" if q is None else str(q) for q in path.ends)),
            ("vertices", path.vertices),
        ])
    if decomposition.unclassified:
        records.append([("unclassified", sorted(decomposition.unclassified))])
    return records


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        text, code = COMMANDS[args.verb](args)
    except BudgetExceeded as e:
        print(f"treepack: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, GraphFormatError, UnsupportedError, SimulationError, OSError) as e:
        print(f"treepack: {e}", file=sys.stderr)
        return EXIT_BAD_INPUT

    output = getattr(args, "output", None)
    if output:
        with open(output, "w", encoding="ascii") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
