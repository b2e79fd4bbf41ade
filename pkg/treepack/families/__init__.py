from .base import ALL_FAMILY_TAGS, ChordSpec, FamilySpec
from .cycles import PathFamily, CycleFamily, ChordedCycleFamily, ErdosPosaFamily
from .g3 import G3_EDGES, G3_T2_IMAGE, G3Family, HChainFamily, anti_contraction_steps, g3_from_k4


all_families = dict(
    path=PathFamily,
    cycle=CycleFamily,
    chorded_cycle=ChordedCycleFamily,
    erdos_posa=ErdosPosaFamily,
    g3=G3Family,
    h_chain=HChainFamily,
)


def family_from_spec(spec):
    try:
        family_class = all_families[spec.family]
    except KeyError:
        raise TypeError(
            f"Unsupported family found: {spec.family}.\n"
            f"All available families: {ALL_FAMILY_TAGS}."
        )

    if family_class is ChordedCycleFamily:
        return family_class(r=spec.r, chords=spec.chords)
    if family_class is ErdosPosaFamily:
        return family_class(r=spec.r, h=spec.h, attach_index=spec.attach_index)
    return family_class(r=spec.r)


def build_family(spec):
    return family_from_spec(spec).build()


def path_family(r):
    return PathFamily(r).build()


def cycle_family(r):
    return CycleFamily(r).build()


def chorded_cycle_family(r, chords):
    return ChordedCycleFamily(r, chords).build()


def erdos_posa_family(r, h, i=0):
    return ErdosPosaFamily(r, h, i).build()


def canonical_g3():
    return G3Family().build()


def h_chain(r):
    return HChainFamily(r).build()


def lemma_cover(family, r, **params):
    """The explicit cover quoted for a family instance, None when there is none."""
    return family_from_spec(FamilySpec(family, r=r, **params)).cover_witness()
