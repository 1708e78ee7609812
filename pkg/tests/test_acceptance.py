"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Everything here is exact (integer and set equality); there are no numeric
tolerances anywhere.  Run with `pytest tests/test_acceptance.py -v -s` to see
the per-criterion lines.
"""

import pytest

from loclab import corpus
from loclab.fincat import FinCat, validate_category
from loclab.ktheory import k0_group, k0_presentation, waldhausen_truncated
from loclab.lifting import MorphismClass
from loclab.modelstruct import (ModelStructure, colocalizations_via_op,
                                enumerate_localizations, fibrant_objects,
                                fibrant_replacement_functor, homotopy_category,
                                maps_between_fibrants_are_fibrations,
                                verify_model_axioms)
from loclab.monadkit import monad_from_reflector, monad_morphism_exists, verify_monad
from loclab.reflect import find_reflector
from loclab.ringmod import RingHom, localization_exists_verdict, ring_from_spec
from loclab.snf import smith_normal_form
from oracles import (closure_operator_fixed_sets, coreflective_members_direct,
                     ring_map_is_epi_on)

# categories satisfying the localization hypotheses (finitely bicomplete and
# finitely well-complete); the other corpus categories are exercised elsewhere
LOCALIZABLE = ("chain2", "chain3", "chain4", "chain5", "chain6",
               "diamond", "pentagon", "terminal")


def report(number: int, description: str, ok: bool) -> None:
    print(f"ACCEPTANCE {number:02d} {'PASS' if ok else 'FAIL'} - {description}")
    assert ok, f"criterion {number}: {description}"


@pytest.fixture(scope="module")
def families(cats):
    return {name: enumerate_localizations(cats[name]) for name in LOCALIZABLE}


def test_criterion_01_chain_localization_counts(cats):
    ok = True
    for n in range(2, 7):
        cat = cats[f"chain{n}"]
        family = enumerate_localizations(cat)
        enumerated = {frozenset(m) for m in family.subcat_members}
        oracle = closure_operator_fixed_sets(cat)
        ok = ok and len(family.structures) == 2 ** (n - 1) and enumerated == oracle
    report(1, "chains n=2..6 have exactly 2^(n-1) localizations, matching the "
              "closure-operator oracle", ok)


def test_criterion_02_model_axiom_suite(families):
    failures = []
    for name, family in families.items():
        for members, st in zip(family.subcat_members, family.structures):
            rep = verify_model_axioms(st)
            if not rep.ok:
                failures.append((name, members, rep.first_failure))
    report(2, "all six closed-model axiom families pass exhaustively on every "
              "enumerated localization of every corpus category", not failures)


def test_criterion_03_acyclic_fibration_rigidity(families):
    ok = all(st.acyclic_fibrations().members == family.base.isos()
             for family in families.values() for st in family.structures)
    report(3, "we-and-fib equals the isomorphism class exactly in every "
              "enumerated localization", ok)


def test_criterion_04_bijection_round_trips(families):
    ok = True
    for name, family in families.items():
        cat = family.base
        refls, structures = family.reflectors, family.structures
        # Refl -> Loc -> Refl: fibrant objects recover the members
        for r, st in zip(refls, structures):
            ok = ok and set(fibrant_objects(st)) == set(r.members)
        # Loc -> Refl -> Loc: the three classes come back on the nose
        for st in structures:
            search = find_reflector(cat, frozenset(fibrant_objects(st)))
            ok = ok and search.found
            if search.found:
                from loclab.modelstruct import localization_from_reflector
                st2 = localization_from_reflector(search.reflector)
                ok = ok and (st2.cof.members, st2.we.members, st2.fib.members) == \
                    (st.cof.members, st.we.members, st.fib.members)
        # order reversal Refl vs Loc, edge by edge
        for i, ri in enumerate(refls):
            for j, rj in enumerate(refls):
                ok = ok and (ri.members <= rj.members) == \
                    (structures[j].we.members <= structures[i].we.members)
        # order-preserving bijection Refl^op -> IdemMonads, edge by edge
        monads = [monad_from_reflector(r) for r in refls]
        for i, ri in enumerate(refls):
            for j, rj in enumerate(refls):
                exists = monad_morphism_exists(monads[j], monads[i]) is not None
                ok = ok and (ri.members <= rj.members) == exists
    report(4, "Refl <-> Loc <-> IdemMonads round trips are identities and both "
              "order bijections hold edge-by-edge", ok)


def test_criterion_05_fibrant_replacement(families):
    ok = True
    for family in families.values():
        for st in family.structures:
            repl = fibrant_replacement_functor(st)
            ok = ok and repl.unique_fillers and repl.functorial and repl.adjunction_ok
    report(5, "replacement fillers are unique (count 1), replacement is a "
              "functor, and the hom-set bijection certifies it is left adjoint "
              "to the inclusion of fibrants", ok)


def test_criterion_06_homotopy_category(families):
    ok = True
    for family in families.values():
        for st in family.structures:
            ok = ok and homotopy_category(st).equivalence_ok
    report(6, "the homotopy category is equivalent to the fibrant full "
              "subcategory (fully faithful + essentially surjective by "
              "enumeration) for every localization", ok)


def test_criterion_07_fibrant_maps_are_fibrations(families):
    ok = all(maps_between_fibrants_are_fibrations(st)[0]
             for family in families.values() for st in family.structures)
    report(7, "100% of morphisms between fibrant objects are fibrations", ok)


def test_criterion_08_duality_on_the_diamond(cats):
    diamond = cats["diamond"]
    via_op = colocalizations_via_op(diamond)
    direct = coreflective_members_direct(diamond)
    members_via_op = [frozenset(m) for m in via_op.subcat_members]
    ok = set(members_via_op) == direct
    ok = ok and len(via_op.structures) == len(direct)
    # poset agreement: coreflective inclusion is the reverse of we-inclusion
    for i, mi in enumerate(members_via_op):
        for j, mj in enumerate(members_via_op):
            ok = ok and (mi <= mj) == via_op.leq(j, i)
    # self-duality: colocalization count equals localization count
    ok = ok and len(via_op.structures) == len(enumerate_localizations(diamond).structures)
    report(8, "colocalizations via the opposite category match direct "
              "coreflective enumeration on the self-dual diamond (counts and "
              "posets exactly)", ok)


def test_criterion_09_ring_criterion():
    rings = {name: ring_from_spec(corpus.load_json(name)) for name in corpus.RINGS}
    cases = [
        ("ring_z4", "ring_z2", "hom_z4_to_z2", True),
        ("ring_z6", "ring_z2", "hom_z6_to_z2", True),
        ("ring_z2", "ring_z2_dual", "hom_z2_to_z2_dual", False),
        ("ring_z2", "ring_z2xz2", "hom_z2_diag_z2xz2", False),
    ]
    test_rings = list(rings.values())
    ok = True
    for rname, sname, mname, expected in cases:
        phi = RingHom(rings[rname], rings[sname], corpus.load_json(mname)["map"])
        verdict = localization_exists_verdict(phi)
        ok = ok and verdict.exists == expected
        ok = ok and verdict.exists == ring_map_is_epi_on(phi, test_rings)
    for ring in rings.values():
        phi = RingHom(ring, ring, {e: e for e in ring.elements})
        verdict = localization_exists_verdict(phi)
        ok = ok and verdict.exists and ring_map_is_epi_on(phi, test_rings)
    report(9, "tensor-square verdicts (Z/4->Z/2 yes, Z/6->Z/2 yes, "
              "Z/2->dual no, Z/2->Z/2xZ/2 no, identities yes) all match the "
              "ring-epimorphism cancellation oracle", ok)


def test_criterion_10_k0_triviality():
    ok = True
    for p, bound in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]:
        for mode in ("isos", "all"):
            pres = k0_presentation(waldhausen_truncated(p, bound, mode))
            ok = ok and k0_group(pres) == ()
    # the Smith normal form self-validates by transform re-multiplication on
    # every call; confirm the check is live
    ok = ok and smith_normal_form([[6, 4], [8, 2]], check=True).diagonal == [2, 10]
    report(10, "K0 is trivial for truncated abelian p-group categories "
               "(p=2 bound<=3, p=3 bound<=2) under we=isos and we=all; SNF "
               "self-validates by transform re-multiplication", ok)


def test_criterion_11_negative_fixtures():
    ok = True
    rep = validate_category(FinCat.from_json_dict(
        corpus.load_json("fixtures/bad/cat_assoc_broken")))
    ok = ok and not rep.ok and rep.violation.law == "associativity" and rep.violation.witness

    rep = validate_category(FinCat.from_json_dict(
        corpus.load_json("fixtures/bad/cat_compose_srcdst")))
    ok = ok and not rep.ok and rep.violation.law == "compose-src-dst"

    data = corpus.load_json("fixtures/bad/model_dropped_fib")
    cat = FinCat.from_json_dict(data["category"])
    ms = ModelStructure(cat, MorphismClass.of(cat, data["cof"]),
                        MorphismClass.of(cat, data["we"]),
                        MorphismClass.of(cat, data["fib"]), "file")
    arep = verify_model_axioms(ms)
    ok = ok and not arep.ok and arep.first_failure == \
        ("acyclic-cof-equals-llp-fib", ("m_0_1",))

    from loclab.cli import _monad_from_file
    mrep = verify_monad(_monad_from_file(corpus.load_json("fixtures/bad/monad_mutated_mult")))
    ok = ok and not mrep.ok and mrep.first is not None and bool(mrep.first.witness)
    ok = ok and any(v.law == "monad-associativity" for v in mrep.violations)

    rings = {name: ring_from_spec(corpus.load_json(name))
             for name in ("ring_z2", "ring_z2xz2")}
    verdict = localization_exists_verdict(RingHom(
        rings["ring_z2"], rings["ring_z2xz2"],
        corpus.load_json("hom_z2_diag_z2xz2")["map"]))
    ok = ok and not verdict.exists and verdict.mult.tensor_order == 16

    report(11, "every mutated fixture (broken associativity, bad composite "
               "typing, dropped fibration, mutated monad multiplication, "
               "non-iso multiplication map) is rejected with a witness", ok)
