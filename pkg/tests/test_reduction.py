import logging

import pytest

from fdcrules.context import (
    ContextError,
    FormalContext,
    FormalDecisionContext,
    complement_decision,
    random_fdc,
)
from fdcrules.lattice import ConceptKind, build_lattice
from fdcrules import render
from fdcrules.reduction import (
    ReductionTooLarge,
    UnsatisfiableError,
    absorb,
    discernibility_function,
    discernibility_matrix,
    i_reductions,
    ii_reductions,
    is_consistent_by_extents,
    is_consistent_by_rules,
    is_I_consistent,
    is_II_consistent,
    minimal_dnf,
    premise_extent_family,
    reductions,
)
from oracles import minimal_hitting_sets, minimal_true_subsets

from conftest import attrs, fmt, objs

FIXTURE_CELLS = {
    ("4", ""): "f",
    ("35", "3"): "c",
    ("135", "35"): "a",
    ("2345", "234"): "bc",
    ("2345", "245"): "ce",
    ("2345", "345"): "bd",
    ("12345", "1345"): "bd",
    ("12345", "2345"): "a",
}
# same conditional lattice, so the complement's matrix keeps the rows whose
# upper extent lies in its premise family {∅, 4, 135, U}
COMPLEMENT_CELLS = {k: v for k, v in FIXTURE_CELLS.items() if k[0] in ("4", "135", "12345")}


def matrix_cells(fdc):
    matrix = discernibility_matrix(fdc)
    lat, cond = matrix.lattice, fdc.conditional
    return {
        (fmt(lat[k.upper].extent, cond.objects).replace("∅", ""),
         fmt(lat[k.lower].extent, cond.objects).replace("∅", "")): fmt(v, cond.attributes)
        for k, v in matrix.entries.items()
    }


def names(values, universe):
    return sorted(fmt(v, universe) for v in values)


class TestPremiseFamily:
    def test_table1(self, t1):
        assert premise_extent_family(t1) == {objs(t1.conditional, e) for e in ["", "4", "35", "135", "2345", "U"]}

    def test_complement(self, t1):
        fam = premise_extent_family(complement_decision(t1))
        assert fam == {objs(t1.conditional, e) for e in ["", "4", "135", "U"]}

    @pytest.mark.parametrize("seed", range(10))
    def test_inside_object_oriented_extents(self, seed):
        fdc = random_fdc(7, 5, 3, 0.4, seed)
        assert premise_extent_family(fdc) <= set(build_lattice(fdc.conditional, ConceptKind.OBJECT).extents)


class TestMatrix:
    def test_fixture_cells(self, t1):
        assert matrix_cells(t1) == FIXTURE_CELLS

    def test_complement_cells(self, t1):
        assert matrix_cells(complement_decision(t1)) == COMPLEMENT_CELLS

    def test_symmetric_lookup(self, t1):
        matrix = discernibility_matrix(t1)
        lat = matrix.lattice
        i, j = lat.index_of(objs(t1.conditional, "135")), lat.index_of(objs(t1.conditional, "35"))
        assert matrix.entry(i, j) == matrix.entry(j, i) == attrs(t1.conditional, "a")
        # (3,e) and (4,f) are not in a cover relation
        k, m = lat.index_of(objs(t1.conditional, "3")), lat.index_of(objs(t1.conditional, "4"))
        assert matrix.entry(k, m) == 0

    def test_entries_non_empty(self, t1):
        assert all(discernibility_matrix(t1).entries.values())

    def test_text_layout(self, t1):
        lines = render.matrix_text(discernibility_matrix(t1)).splitlines()
        assert lines[0].split() == ["(∅,∅)", "(3,e)", "(35,ce)", "(234,def)", "(245,bdf)", "(345,cef)",
                                    "(1345,acef)", "(2345,bcdef)"]
        assert lines[2].split() == ["(4,f)", "f"]
        assert [line.split()[0] for line in lines[1:]] == ["(∅,∅)", "(4,f)", "(35,ce)", "(135,ace)",
                                                          "(2345,bcdef)", "(12345,abcdef)"]


class TestFunction:
    def test_table1(self, t1):
        clauses = discernibility_function(discernibility_matrix(t1))
        assert render.cnf_text(clauses, t1.conditional.attributes) == "a∧c∧f∧(b∨d)"

    def test_complement(self, t1):
        clauses = discernibility_function(discernibility_matrix(complement_decision(t1)))
        assert render.cnf_text(clauses, t1.conditional.attributes) == "a∧f∧(b∨d)"

    def test_absorb(self):
        assert absorb([0b110, 0b010, 0b010, 0b101]) == [0b010, 0b101]


class TestMinimalDnf:
    M = tuple("abcdef")

    def clauses(self, *words):
        return [sum(1 << self.M.index(ch) for ch in w) for w in words]

    def test_table1_clauses(self):
        got = minimal_dnf(self.clauses("f", "c", "a", "bc", "ce", "bd"))
        assert names(got, self.M) == ["abcf", "acdf"]

    def test_complement_clauses(self):
        assert names(minimal_dnf(self.clauses("f", "a", "bd")), self.M) == ["abf", "adf"]

    def test_empty_family(self):
        assert minimal_dnf([]) == [0]

    def test_empty_clause(self):
        with pytest.raises(UnsatisfiableError, match="unsatisfiable"):
            minimal_dnf([0b1, 0])

    def test_guard(self):
        with pytest.raises(ReductionTooLarge):
            minimal_dnf([1 << i for i in range(30)])

    @pytest.mark.parametrize("seed", range(30))
    def test_against_exhaustive(self, seed):
        import random

        rng = random.Random(seed)
        n = rng.randint(1, 7)
        clauses = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(0, 6))]
        assert sorted(minimal_dnf(clauses)) == sorted(minimal_hitting_sets(clauses, n))


class TestConsistency:
    @pytest.mark.parametrize("e, want", [("abcf", True), ("acdf", True), ("M", True), ("acf", False), ("e", False)])
    def test_table1(self, t1, e, want):
        E = attrs(t1.conditional, e)
        assert is_I_consistent(t1, E) is want
        assert is_consistent_by_rules(t1, E, "I") is want
        assert is_consistent_by_extents(t1, E, "I") is want

    def test_II_table1(self, t1):
        E = attrs(t1.conditional, "abf")
        assert is_II_consistent(t1, E)
        assert is_consistent_by_rules(t1, E, "II")
        assert not is_II_consistent(t1, attrs(t1.conditional, "ab"))

    def test_empty_rejected(self, t1):
        with pytest.raises(ContextError):
            is_I_consistent(t1, 0)

    def test_outside_rejected(self, t1):
        with pytest.raises(ContextError):
            is_I_consistent(t1, 1 << 6)

    @pytest.mark.parametrize("seed", range(15))
    def test_all_characterisations_5x5x2(self, seed):
        fdc = random_fdc(5, 5, 2, 0.4, seed)
        clauses = discernibility_function(discernibility_matrix(fdc))
        comp = complement_decision(fdc)
        previous = {}
        for E in range(1, 1 << 5):
            fast = is_I_consistent(fdc, E)
            assert is_consistent_by_rules(fdc, E, "I") == fast
            assert is_consistent_by_extents(fdc, E, "I") == fast
            assert all(E & c for c in clauses) == fast
            assert is_consistent_by_rules(fdc, E, "II") == is_I_consistent(comp, E)
            previous[E] = fast
        # monotone: supersets of consistent sets stay consistent
        for E, ok in previous.items():
            if ok:
                assert all(previous[F] for F in previous if E & ~F == 0)


class TestReductions:
    def test_table1(self, t1):
        res = i_reductions(t1)
        assert names(res.reductions, t1.conditional.attributes) == ["abcf", "acdf"]
        assert res.core == attrs(t1.conditional, "acf")
        assert not res.unconstrained

    def test_table1_II(self, t1):
        res = ii_reductions(t1)
        assert names(res.reductions, t1.conditional.attributes) == ["abf", "adf"]
        assert res.core == attrs(t1.conditional, "af")
        assert reductions(t1, "II") == res

    def test_unconstrained(self, caplog):
        # an empty conditional incidence leaves the single concept (∅, M): no cover pairs at all
        cond = FormalContext.from_matrix(["1", "2"], ["a", "b"], [[False, False], [False, False]])
        dec = FormalContext.from_matrix(["1", "2"], ["d"], [[True], [False]])
        fdc = FormalDecisionContext(cond, dec)
        assert premise_extent_family(fdc) == {0}
        assert discernibility_matrix(fdc).entries == {}
        with caplog.at_level(logging.WARNING):
            res = i_reductions(fdc)
        assert res.reductions == (0,) and res.unconstrained and res.clauses == ()
        assert "no conditional attribute" in caplog.text
        # brute force agrees: every non-empty subset is consistent
        assert all(is_I_consistent(fdc, E) for E in (1, 2, 3))

    @pytest.mark.parametrize("seed", range(20))
    @pytest.mark.parametrize("rule_type", ["I", "II"])
    def test_against_subset_enumeration(self, seed, rule_type):
        fdc = random_fdc(6, 6, 3, 0.4, seed)
        res = reductions(fdc, rule_type)
        check = is_I_consistent if rule_type == "I" else is_II_consistent
        want = minimal_true_subsets(6, lambda E: check(fdc, E))
        if res.unconstrained:
            assert all(bin(w).count("1") == 1 for w in want)
            return
        assert sorted(res.reductions) == sorted(want)
        for r in res.reductions:
            for v in range(6):
                if r >> v & 1 and r != 1 << v:
                    assert not check(fdc, r & ~(1 << v))
