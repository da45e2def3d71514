"""
Executable verifiers, one per theorem id.

Each verifier instantiates the hypothesis of its result over the scope and
checks the conclusion with the classification predicates. Only a verdict
that is proven or refuted against the claim counts as a violation;
unfalsified answers of the bounded monomial search never do.
"""

import time
from collections import Counter, defaultdict
from functools import lru_cache, reduce
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from loguru import logger

from app.classify import predicates as PR
from app.classify.scan import KeySpace, bits
from app.config import settings
from app.errors import ParseError, PreconditionError, ScopeError
from app.ideals.ideal import Ideal, contains, maximal_ideal, principal_ideal
from app.ideals.operations import colon, intersect, is_subideal, power, product, radical, radical_contains
from app.rings import handles as H
from app.rings import poly as P
from app.rings.factor import divisors, prime_power
from app.rings.handles import Backend, Element, RingHandle
from app.rings.structure import (
    is_chained,
    is_divided,
    is_irreducible_element,
    is_prime_element,
    is_quasilocal,
    is_unit,
)
from app.theorems import instances as X
from app.theorems.constructions import construct_PM, construct_xM
from app.theorems.ids import NON_EXECUTABLE, Scope, TheoremId
from app.theorems.report import VerificationReport, Violation
from app.transfer.homs import (
    RingHom,
    check_hom_hypotheses,
    image_ideal,
    preimage_ideal,
    projection,
    quotient_map,
)
from app.transfer.localization import complement_of, localize, parse_localization, powers_of
from app.utils.helpers import calculate_elapsed_time, parallel_map
from app.verdict import Method, Verdict

MUTATION_TWO_ABS = "2abs-implies-1abs"
MUTATIONS = (MUTATION_TWO_ABS,)

# implications checked by the chain verifier, antecedent first
_CHAIN = (
    (PR.PRIME, PR.PRIMARY),
    (PR.PRIMARY, PR.ONE_ABSORBING),
    (PR.ONE_ABSORBING, PR.TWO_ABSORBING_PRIMARY),
    (PR.PRIME, PR.TWO_ABSORBING),
    (PR.TWO_ABSORBING, PR.TWO_ABSORBING_PRIMARY),
)

_PREDICATES = {
    PR.PRIME: PR.is_prime_ideal,
    PR.PRIMARY: PR.is_primary,
    PR.ONE_ABSORBING: PR.is_one_absorbing_primary,
    PR.TWO_ABSORBING_PRIMARY: PR.is_two_absorbing_primary,
    PR.TWO_ABSORBING: PR.is_two_absorbing,
}

_quasilocal = lru_cache(maxsize=None)(is_quasilocal)


def _format(witness) -> Optional[str]:
    if witness is None:
        return None
    if isinstance(witness, str):
        return witness
    if isinstance(witness, Verdict):
        witness = witness.witness
    return "(" + ", ".join(str(w) for w in witness) + ")"


def _label(ideal: Ideal) -> str:
    return f"{ideal.ring} {ideal}"


class _Tally:
    """Instances, violations, branch counts and notes of one verifier run."""

    def __init__(self, theorem: TheoremId, scope: Scope):
        self.theorem = theorem
        self.scope = scope
        self.instances = 0
        self.violations: List[Violation] = []
        self.notes: List[str] = []
        self.branches: Counter = Counter()

    def check(self, ok: bool, instance: str, witness=None, count: int = 1) -> bool:
        self.instances += count
        if not ok:
            text = _format(witness)
            self.violations.append(Violation(instance=instance, witness=text))
            logger.warning(f"{self.theorem.value} violated at {instance}: {text}")
        return ok

    def branch(self, name: str) -> None:
        self.branches[name] += 1

    def skip(self, reason: str) -> None:
        self.branches[f"hypothesis not met ({reason})"] += 1

    def note(self, text: str) -> None:
        self.notes.append(text)

    def report(self) -> VerificationReport:
        notes = self.notes + [f"{name}: {n}" for name, n in sorted(self.branches.items())]
        return VerificationReport(
            theorem=self.theorem.value,
            scope=self.scope.describe(),
            instances_checked=self.instances,
            violations=self.violations,
            notes=notes,
        )


def _one(ideal: Ideal, scope: Scope) -> Verdict:
    return PR.is_one_absorbing_primary(ideal, X.bounds(scope))


def _primary(ideal: Ideal, scope: Scope) -> Verdict:
    return PR.is_primary(ideal, X.bounds(scope))


def _prime(ideal: Ideal, scope: Scope) -> Verdict:
    return PR.is_prime_ideal(ideal, X.bounds(scope))


def _is_power_of(ideal: Ideal, prime: Ideal, limit: int = 64) -> bool:
    """Whether ``ideal = prime^n`` for some ``1 <= n <= limit``."""
    current = prime
    for _ in range(limit):
        if current == ideal:
            return True
        if not is_subideal(ideal, current) or current == product(current, prime):
            return False
        current = product(current, prime)
    return False


def _nonunit_reps(ideal: Ideal, scope: Scope) -> List[Element]:
    """Nonunits representing every class that matters for membership in ``ideal``."""
    ring = ideal.ring
    if ring.backend == Backend.MON_LOC:
        return [ring.element(P.poly_from_support([m])) for m in P.monomials_up_to(scope.monloc_degree)]
    space = KeySpace(ideal)
    return [space.element(i, nonunit=True) for i in bits(space.nonunits)]


def _exact_rings(scope: Scope) -> List[Tuple[RingHandle, List[Ideal]]]:
    """Rings decided exactly, each with its proper ideals in the scope."""
    groups = [(r, X.ideals_of(r, scope)) for r in X.finite_rings(scope)]
    if scope.includes("int"):
        groups.append((H.integers(), X.int_ideals(scope, zero=True)))
    if scope.includes("intinv"):
        groups += [(H.int_inv(s), X.ideals_of(H.int_inv(s), scope)) for s in X.INVERTED]
    if scope.includes("intloc"):
        groups += [(H.int_loc(p), X.ideals_of(H.int_loc(p), scope)) for p in X.LOCAL_PRIMES]
    return groups


def _chain(t: _Tally, scope: Scope) -> None:
    b = X.bounds(scope)
    for ideal in X.every_ideal(scope):
        verdicts = {kind: check(ideal, b) for kind, check in _PREDICATES.items()}
        broken = [f"{a} => {c}" for a, c in _CHAIN if verdicts[a].holds and verdicts[c].is_refuted]
        invalid = [
            f"invalid {kind} witness {_format(v)}"
            for kind, v in verdicts.items()
            if v.is_refuted and v.witness and not PR.validate_witness(kind, ideal, v.witness)
        ]
        t.check(not broken and not invalid, _label(ideal), "; ".join(broken + invalid))


def _mutated_chain(t: _Tally, scope: Scope) -> None:
    t.note(f"mutation {MUTATION_TWO_ABS}: claims every 2-absorbing primary ideal is 1-absorbing primary")
    ring = H.integers()
    for m in range(2, scope.int_max + 1):
        ideal = Ideal(ring, m)
        two = PR.is_two_absorbing_primary(ideal)
        one = PR.is_one_absorbing_primary(ideal)
        if two.holds and one.is_refuted:
            valid = PR.validate_witness(PR.ONE_ABSORBING, ideal, one.witness)
            t.check(False, _label(ideal), one if valid else f"unverified {_format(one)}")
        else:
            t.check(True, _label(ideal))


def _radical_prime(t: _Tally, scope: Scope) -> None:
    everything = [i for r in X.finite_rings(scope) for i in X.ideals_of(r, scope, proper=False)]
    everything += [i for i in X.every_ideal(scope) if not i.ring.is_finite]
    for ideal in everything:
        if not ideal.is_proper:
            t.check(True, _label(ideal))
            continue
        one = _one(ideal, scope)
        rad = radical(ideal)
        t.check(not one.holds or _prime(rad, scope).holds, _label(ideal), (rad,))


def _not_primary_quasilocal(t: _Tally, scope: Scope) -> None:
    for ideal in X.every_ideal(scope):
        one = _one(ideal, scope)
        primary = _primary(ideal, scope)
        if one.holds and primary.is_refuted:
            t.branch("1-absorbing primary, not primary")
            t.check(_quasilocal(ideal.ring), _label(ideal), primary)
        else:
            t.check(True, _label(ideal))


def _non_quasilocal(t: _Tally, scope: Scope) -> None:
    for ideal in X.every_ideal(scope):
        ring = ideal.ring
        one = _one(ideal, scope)
        primary = _primary(ideal, scope)
        if not _quasilocal(ring):
            t.branch("non-quasilocal ring")
            t.check(one.status == primary.status, _label(ideal), f"1-abs {one}, primary {primary}")
        elif ring.is_finite:
            # finite local rings have nilpotent nonunits, so no ideal separates the classes
            t.branch("finite quasilocal ring")
            t.check(not (one.holds and primary.is_refuted), _label(ideal), primary)
    t.note("on finite rings every 1-absorbing primary ideal was also found primary")


def _product_form(t: _Tally, scope: Scope) -> None:
    ideals = [i for r in X.prod_rings(scope) for i in X.ideals_of(r, scope)] + X.zxz_ideals(scope)
    for ideal in ideals:
        left, right = ideal.payload
        form = (not left.is_proper and _primary(right, scope).holds) or (
            not right.is_proper and _primary(left, scope).holds
        )
        one = _one(ideal, scope)
        primary = _primary(ideal, scope)
        fast = PR.fast_one_absorbing(ideal)
        ok = one.holds == form and primary.holds == form and fast.status == one.status
        t.check(ok, _label(ideal), f"form {form}, 1-abs {one}, primary {primary}, fast {fast}")


def _quasilocal_rings(scope: Scope) -> List[RingHandle]:
    rings = [r for r in X.zmod_rings(scope) if _quasilocal(r)]
    if scope.includes("intloc"):
        rings += [H.int_loc(p) for p in X.LOCAL_PRIMES]
    if scope.includes("monloc"):
        rings.append(H.mon_loc())
    return rings


def _candidate_elements(ring: RingHandle) -> List[Element]:
    if ring.is_finite:
        return [x for x in ring.elements() if not x.is_zero and not is_unit(ring, x)]
    if ring.backend == Backend.INT_LOC:
        return [ring.element(ring.param)]
    return [ring.element("x"), ring.element("y")]


def _prime_times_maximal_element(t: _Tally, scope: Scope) -> None:
    for ring in _quasilocal_rings(scope):
        for x in _candidate_elements(ring):
            if not is_prime_element(ring, x).holds:
                continue
            try:
                built = construct_xM(ring, x)
            except PreconditionError as e:
                t.skip(e.reason)
                continue
            ideal = built.ideal
            primary = _primary(ideal, scope)
            ok = (
                built.agreement
                and not _one(ideal, scope).is_refuted
                and primary.is_refuted
                and PR.validate_witness(PR.PRIMARY, ideal, built.witnesses)
            )
            t.check(ok, f"{ring} x={x}", built.witnesses)


def _irreducible_factor(t: _Tally, scope: Scope) -> None:
    for ideal in X.every_ideal(scope):
        one = _one(ideal, scope)
        primary = _primary(ideal, scope)
        if not (one.holds and primary.is_refuted):
            continue
        ring = ideal.ring
        a, b = primary.witness
        irreducible = is_irreducible_element(ring, a, scope.monloc_degree)
        ok = (
            PR.validate_witness(PR.PRIMARY, ideal, primary.witness)
            and not is_unit(ring, b)
            and not irreducible.is_refuted
        )
        t.check(ok, _label(ideal), primary)


def _prime_times_maximal(t: _Tally, scope: Scope) -> None:
    for ring in _quasilocal_rings(scope):
        for prime in X.ideals_of(ring, scope):
            if not _prime(prime, scope).holds:
                continue
            try:
                built = construct_PM(ring, prime)
            except PreconditionError as e:
                t.skip(e.reason)
                continue
            ideal = built.ideal
            ok = built.agreement and radical(ideal) == prime and not _one(ideal, scope).is_refuted
            t.check(ok, f"{ring} P={prime}", (ideal,))


def _colon_primary(t: _Tally, scope: Scope) -> None:
    for ideal in X.every_ideal(scope):
        if not _one(ideal, scope).holds:
            continue
        rad = radical(ideal)
        for c in _nonunit_reps(ideal, scope):
            if contains(ideal, c):
                continue
            quotient = colon(ideal, c)
            ok = not _primary(quotient, scope).is_refuted
            if radical_contains(ideal, c):
                ok = ok and quotient != ideal and is_subideal(ideal, quotient)
            else:
                ok = ok and radical(quotient) == rad
            t.check(ok, f"{_label(ideal)} c={c}", (c, quotient))

    if scope.includes("monloc"):
        ring = H.mon_loc()
        ideal = Ideal(ring, frozenset({(2, 0), (1, 1)}))
        maximal = maximal_ideal(ring)
        quotient = colon(ideal, ring.element("x"))
        ok = quotient == maximal and not is_subideal(maximal, radical(ideal))
        t.check(ok, f"{_label(ideal)} c=x", (quotient,))


def _divided(t: _Tally, scope: Scope) -> None:
    rings = [r for r in X.zmod_rings(scope) if is_divided(r)]
    if scope.includes("intloc"):
        rings += [H.int_loc(p) for p in X.LOCAL_PRIMES]
    for ring in rings:
        for ideal in X.ideals_of(ring, scope):
            one = _one(ideal, scope)
            primary = _primary(ideal, scope)
            t.check(one.status == primary.status, _label(ideal), f"1-abs {one}, primary {primary}")

    structural = X.finite_rings(scope) + [
        H.integers(),
        H.prod(H.integers(), H.integers()),
        H.int_inv(2),
        H.int_loc(2),
        H.mon_loc(),
    ]
    for ring in structural:
        chained, divided, quasilocal = is_chained(ring), is_divided(ring), _quasilocal(ring)
        ok = (not chained or divided) and (not divided or quasilocal)
        t.branch("chained ring" if chained else "divided ring" if divided else "neither")
        t.check(ok, f"{ring} structure", f"chained={chained} divided={divided} quasilocal={quasilocal}")


def _divided_domains(scope: Scope) -> List[RingHandle]:
    rings = X.prime_fields(scope)
    if scope.includes("intloc"):
        rings += [H.int_loc(p) for p in X.LOCAL_PRIMES]
    return rings


def _divided_domain_powers(t: _Tally, scope: Scope) -> None:
    for ring in _divided_domains(scope):
        for prime in X.ideals_of(ring, scope):
            if not _prime(prime, scope).holds:
                continue
            for n in range(1, scope.local_exponent_max + 1):
                ideal = power(prime, n)
                ok = _primary(ideal, scope).holds and _one(ideal, scope).holds
                t.check(ok, f"{ring} ({prime})^{n}", (ideal,))


def _valuation_domain(t: _Tally, scope: Scope) -> None:
    t.note("clause (3) is checked as the stated implication only, not as an equivalence")
    for ring in _divided_domains(scope):
        for ideal in X.ideals_of(ring, scope):
            prime = radical(ideal)
            one = _one(ideal, scope)
            primary = _primary(ideal, scope)
            clause = prime == product(prime, prime) or _is_power_of(ideal, prime)
            ok = one.status == primary.status and (not primary.holds or clause)
            t.check(ok, _label(ideal), f"1-abs {one}, primary {primary}, power clause {clause}")


def _dedekind_ideals(scope: Scope, zero: bool = False) -> List[Ideal]:
    ideals = X.int_ideals(scope, zero=zero) + X.intinv_ideals(scope) + X.intloc_ideals(scope)
    return ideals if zero else [i for i in ideals if not i.is_zero]


def _prufer(t: _Tally, scope: Scope) -> None:
    t.note("clause (3) is checked as the stated implication only, not as an equivalence")
    for ideal in _dedekind_ideals(scope, zero=True):
        prime = radical(ideal)
        if not _prime(prime, scope).holds:
            t.skip("radical not prime")
            continue
        one = _one(ideal, scope)
        primary = _primary(ideal, scope)
        # every ideal here is finitely generated
        clause = _is_power_of(ideal, prime)
        ok = one.status == primary.status and (not primary.holds or clause)
        t.check(ok, _label(ideal), f"1-abs {one}, primary {primary}, power clause {clause}")


def _dedekind_radical(t: _Tally, scope: Scope) -> None:
    for ideal in _dedekind_ideals(scope):
        one = _one(ideal, scope)
        t.check(one.holds == _prime(radical(ideal), scope).holds, _label(ideal), one)


def _dedekind_powers(t: _Tally, scope: Scope) -> None:
    t.note(NON_EXECUTABLE[TheoremId.DEDEKIND_POWERS])
    for ideal in _dedekind_ideals(scope):
        prime = radical(ideal)
        expected = _prime(prime, scope).holds and _is_power_of(ideal, prime)
        one = _one(ideal, scope)
        t.check(one.holds == expected, _label(ideal), one)

    if scope.includes("monloc"):
        ring = H.mon_loc()
        ideal = Ideal(ring, frozenset({(2, 0), (1, 1)}))
        primes = [Ideal(ring, frozenset({(1, 0)})), Ideal(ring, frozenset({(0, 1)})), maximal_ideal(ring)]
        powers = [power(p, n) for p in primes for n in range(1, 5)]
        ok = not _one(ideal, scope).is_refuted and ideal not in powers
        t.branch("non-Dedekind ring with a 1-absorbing primary non-power")
        t.check(ok, f"{_label(ideal)} is no prime power", (ideal,))


def _pid_prime_powers(t: _Tally, scope: Scope) -> None:
    for ideal in X.int_ideals(scope):
        one = _one(ideal, scope)
        fast = PR.fast_one_absorbing(ideal)
        expected = prime_power(ideal.modulus) is not None
        ok = one.holds == expected and fast.status == one.status
        if one.is_refuted:
            ok = ok and PR.validate_witness(PR.ONE_ABSORBING, ideal, one.witness)
            ok = ok and PR.validate_witness(PR.ONE_ABSORBING, ideal, fast.witness)
        t.check(ok, _label(ideal), f"oracle {one}, fast {fast}")


def _quotient_rings(scope: Scope) -> List[RingHandle]:
    params = {r.param for r in X.chain_rings(scope)} | {r.param for r in X.zmod_rings(scope)}
    return [H.zmod(n) for n in sorted(params)]


def _quotient_transfer(t: _Tally, scope: Scope) -> None:
    for ring in _quotient_rings(scope):
        ideals = X.ideals_of(ring, scope)
        for small in ideals:
            f = quotient_map(ring, H.zmod(small.payload))
            check = check_hom_hypotheses(f)
            if check.nonunit_preserving is False:
                t.skip("quotient does not preserve nonunits")
                continue
            for big in ideals:
                if not is_subideal(small, big):
                    continue
                t.branch(check.branch)
                image = image_ideal(f, big)
                one, reduced = _one(big, scope), _one(image, scope)
                t.check(one.status == reduced.status, f"{ring} {big}/{small}", f"{one} vs {reduced}")


def _same_radical_intersection(t: _Tally, scope: Scope) -> None:
    t.note("kxy is skipped: intersections leave the degree-bounded family")
    for ring, ideals in _exact_rings(scope):
        groups: Dict[Ideal, List[Ideal]] = defaultdict(list)
        for ideal in ideals:
            if _one(ideal, scope).holds:
                groups[radical(ideal)].append(ideal)
        for prime, members in groups.items():
            for size in range(1, 4):
                for combo in combinations(members, size):
                    meet = reduce(intersect, combo)
                    ok = radical(meet) == prime and _one(meet, scope).holds
                    label = f"{ring} " + " & ".join(str(i) for i in combo)
                    t.check(ok, label, (meet,))


def _ideal_absorption(t: _Tally, scope: Scope) -> None:
    rings = X.finite_rings(scope)
    if scope.includes("intloc"):
        rings += [H.int_loc(p) for p in X.LOCAL_PRIMES]
    for ring in rings:
        ideals = X.ideals_of(ring, scope)
        for ideal in ideals:
            if not _one(ideal, scope).holds:
                continue
            rad = radical(ideal)
            # a*b only matters through its principal ideal
            pairs: Dict[Ideal, Tuple[Element, Element]] = {}
            weight: Counter = Counter()
            reps = _nonunit_reps(ideal, scope)
            for a in reps:
                for b in reps:
                    k = principal_ideal(ring, a * b)
                    pairs.setdefault(k, (a, b))
                    weight[k] += 1
            for k, (a, b) in pairs.items():
                inside = is_subideal(k, ideal)
                for j in ideals:
                    ok = inside or is_subideal(j, rad) or not is_subideal(product(k, j), ideal)
                    t.check(ok, f"{_label(ideal)} J={j}", (a, b), count=weight[k])


def _ideal_triples(t: _Tally, scope: Scope) -> None:
    for ring in X.finite_rings(scope):
        ideals = X.ideals_of(ring, scope)
        index = {i: n for n, i in enumerate(ideals)}
        size = len(ideals)
        times = [[index[product(a, b)] for b in ideals] for a in ideals]
        below = [[is_subideal(a, b) for b in ideals] for a in ideals]
        radicals = [index[radical(i)] for i in ideals]
        for n, ideal in enumerate(ideals):
            witness = None
            seen = set()
            for i1 in range(size):
                for i2 in range(size):
                    k = times[i1][i2]
                    if below[k][n] or k in seen:
                        continue
                    seen.add(k)
                    for i3 in range(size):
                        if below[times[k][i3]][n] and not below[i3][radicals[n]]:
                            witness = (ideals[i1], ideals[i2], ideals[i3])
                            break
                    if witness:
                        break
                if witness:
                    break
            holds = witness is None
            one = _one(ideal, scope)
            t.check(holds == one.holds, _label(ideal), witness or one, count=size**3)


def _homs(scope: Scope) -> List[RingHom]:
    homs = [
        quotient_map(H.zmod(p**k), H.zmod(p**j))
        for p in X.LOCAL_PRIMES
        for k in range(1, scope.local_exponent_max + 1)
        for j in range(1, k + 1)
    ]
    if scope.includes("int"):
        homs += [quotient_map(H.integers(), H.zmod(n)) for n in range(2, scope.zmod_max + 1)]
    homs += [projection(r, i) for r in X.prod_rings(scope) for i in (0, 1)]
    return homs


def _containing_kernel(f: RingHom, scope: Scope) -> List[Ideal]:
    if f.source.is_finite:
        return [i for i in X.ideals_of(f.source, scope) if is_subideal(f.kernel, i)]
    return [Ideal(f.source, d) for d in divisors(f.target.param) if d != 1]


def _homomorphism_transfer(t: _Tally, scope: Scope) -> None:
    for f in _homs(scope):
        check = check_hom_hypotheses(f)
        if not check.identity_ok or check.nonunit_preserving is False:
            t.skip("nonunits not preserved")
            continue
        t.branch(check.branch)
        for target_ideal in X.ideals_of(f.target, scope):
            if _one(target_ideal, scope).holds:
                back = preimage_ideal(f, target_ideal)
                t.check(_one(back, scope).holds, f"{f} preimage of {target_ideal}", (back,))
        for source_ideal in _containing_kernel(f, scope):
            if _one(source_ideal, scope).holds:
                image = image_ideal(f, source_ideal)
                t.check(_one(image, scope).holds, f"{f} image of {source_ideal}", (image,))

    flagged = check_hom_hypotheses(quotient_map(H.integers(), H.zmod(9)))
    ok = flagged.nonunit_preserving is False and flagged.witness == H.integers().element(2)
    t.check(ok, "q:Z->Z/9 hypothesis check", (flagged.witness,) if flagged.witness else None)


def _localization_transfer(t: _Tally, scope: Scope) -> None:
    ring = H.integers()
    specs = [powers_of(s) for s in (2, 3, 5, 7)] + [complement_of(s) for s in (2, 3, 5, 7)]
    for m in range(0, scope.int_max + 1):
        if m == 1:
            continue
        ideal = Ideal(ring, m)
        one = _one(ideal, scope)
        for spec in specs:
            loc = localize(spec, ideal)
            extended = loc.extended
            label = f"{spec} {_label(ideal)}"
            if one.holds and loc.disjoint:
                t.branch("extension")
                t.check(_one(extended, scope).holds, label, (extended,))
            if extended.is_proper and loc.zdiv_disjoint and _one(extended, scope).holds:
                t.branch("contraction")
                t.check(one.holds, label, one)

    examples = [
        ("S=2^k", 24, Ideal(H.int_inv(2), 3), lambda loc: loc.disjoint),
        ("S=5^k", 9, Ideal(H.int_inv(5), 9), lambda loc: loc.zdiv_disjoint),
        ("S=comp(5)", 25, Ideal(H.int_loc(5), 2), lambda loc: True),
    ]
    for text, m, expected, condition in examples:
        loc = localize(parse_localization(text), Ideal(ring, m))
        t.check(loc.extended == expected and condition(loc), f"{text} ({m})", (loc.extended,))


def _monomial_example(t: _Tally, scope: Scope) -> None:
    ring = H.mon_loc()
    b = X.bounds(scope)
    x, y = ring.element("x"), ring.element("y")
    ideal = Ideal(ring, frozenset({(2, 0), (1, 1)}))
    var_x = Ideal(ring, frozenset({(1, 0)}))
    maximal = maximal_ideal(ring)

    t.check(radical(ideal) == var_x, "radical of x^2,x*y", (radical(ideal),))
    primary = PR.is_primary(ideal, b)
    t.check(primary.is_refuted and primary.witness == (x, y), "primary witness", primary)
    one = PR.is_one_absorbing_primary(ideal, b)
    t.check(one.holds and one.method == Method.CERTIFICATE, "1-absorbing primary certificate", one)
    hit = PR.search_witness(PR.ONE_ABSORBING, ideal, b)
    t.check(hit is None and PR.monloc_cross_check(ideal, b), f"bounded search {b.describe()}", hit)
    t.check(construct_xM(ring, x).ideal == ideal, "x M construction")
    t.check(construct_PM(ring, var_x).ideal == ideal, "P M construction")
    t.check(colon(ideal, x) == maximal, "(I : x) = M", (colon(ideal, x),))


def _integer_example(t: _Tally, scope: Scope) -> None:
    ring = H.integers()
    ideal = Ideal(ring, 12)
    t.check(radical(ideal) == Ideal(ring, 6), "radical of (12)", (radical(ideal),))
    primary = PR.is_primary(ideal)
    t.check(primary.is_refuted and primary.witness == (ring.element(3), ring.element(4)), "primary witness", primary)
    one = PR.is_one_absorbing_primary(ideal)
    expected = tuple(ring.element(v) for v in (13, 3, 4))
    t.check(one.is_refuted and one.witness == expected, "minimal 1-absorbing witness", one)
    textbook = tuple(ring.element(v) for v in (2, 2, 3))
    t.check(PR.validate_witness(PR.ONE_ABSORBING, ideal, textbook), "witness (2, 2, 3) validates", textbook)
    two = PR.is_two_absorbing_primary(ideal)
    t.check(two.holds, "2-absorbing primary", two)
    t.check(PR.fast_one_absorbing(ideal).is_refuted, "fast path refutes")


def _product_example(t: _Tally, scope: Scope) -> None:
    z = H.integers()
    ring = H.prod(z, z)
    left = Ideal(ring, (Ideal(z, 4), Ideal(z, 1)))
    right = Ideal(ring, (Ideal(z, 1), Ideal(z, 9)))
    meet = intersect(left, right)
    for ideal in (left, right):
        one = PR.is_one_absorbing_primary(ideal)
        t.check(one.holds and PR.fast_one_absorbing(ideal).holds, _label(ideal), one)
    one = PR.is_one_absorbing_primary(meet)
    ok = (
        meet == Ideal(ring, (Ideal(z, 4), Ideal(z, 9)))
        and one.is_refuted
        and PR.validate_witness(PR.ONE_ABSORBING, meet, one.witness)
        and PR.fast_one_absorbing(meet).is_refuted
    )
    t.check(ok, _label(meet), one)
    t.check(radical(left) != radical(right), "radicals differ", (radical(left), radical(right)))


_VERIFIERS: Dict[TheoremId, Callable[[_Tally, Scope], None]] = {
    TheoremId.IMPLICATION_CHAIN: _chain,
    TheoremId.RADICAL_PRIME: _radical_prime,
    TheoremId.NOT_PRIMARY_FORCES_QUASILOCAL: _not_primary_quasilocal,
    TheoremId.NON_QUASILOCAL_EQUALS_PRIMARY: _non_quasilocal,
    TheoremId.PRODUCT_FORM: _product_form,
    TheoremId.PRIME_TIMES_MAXIMAL_ELEMENT: _prime_times_maximal_element,
    TheoremId.IRREDUCIBLE_FACTOR: _irreducible_factor,
    TheoremId.PRIME_TIMES_MAXIMAL: _prime_times_maximal,
    TheoremId.COLON_PRIMARY: _colon_primary,
    TheoremId.DIVIDED_EQUALS_PRIMARY: _divided,
    TheoremId.DIVIDED_DOMAIN_POWERS: _divided_domain_powers,
    TheoremId.VALUATION_DOMAIN: _valuation_domain,
    TheoremId.PRUFER_DOMAIN: _prufer,
    TheoremId.DEDEKIND_RADICAL: _dedekind_radical,
    TheoremId.DEDEKIND_POWERS: _dedekind_powers,
    TheoremId.PID_PRIME_POWERS: _pid_prime_powers,
    TheoremId.QUOTIENT_TRANSFER: _quotient_transfer,
    TheoremId.SAME_RADICAL_INTERSECTION: _same_radical_intersection,
    TheoremId.IDEAL_ABSORPTION: _ideal_absorption,
    TheoremId.IDEAL_TRIPLES: _ideal_triples,
    TheoremId.HOMOMORPHISM_TRANSFER: _homomorphism_transfer,
    TheoremId.LOCALIZATION_TRANSFER: _localization_transfer,
    TheoremId.MONOMIAL_EXAMPLE: _monomial_example,
    TheoremId.INTEGER_EXAMPLE: _integer_example,
    TheoremId.PRODUCT_EXAMPLE: _product_example,
}


def verify_theorem(theorem: TheoremId, scope: Scope, mutation: Optional[str] = None) -> VerificationReport:
    """Run one verifier over ``scope``.

    Raises:
        ParseError: for an unknown mutation
        ScopeError: when a mutation is requested for another theorem than the chain
    """
    if mutation is not None:
        if mutation not in MUTATIONS:
            raise ParseError("unknown mutation", token=mutation)
        if theorem != TheoremId.IMPLICATION_CHAIN:
            raise ScopeError(f"mutation {mutation} only applies to {TheoremId.IMPLICATION_CHAIN.value}")

    start = time.time()
    tally = _Tally(theorem, scope)
    logger.info(f"verifying {theorem.value} over {scope.describe()}")
    if mutation is not None:
        _mutated_chain(tally, scope)
    else:
        _VERIFIERS[theorem](tally, scope)
    report = tally.report()
    report.elapsed = calculate_elapsed_time(start)
    logger.info(
        f"{theorem.value}: {report.instances_checked} instances, "
        f"{len(report.violations)} violations in {report.elapsed}s"
    )
    return report


def verify_theorems(
    theorems: Iterable[TheoremId],
    scope: Scope,
    mutation: Optional[str] = None,
    threads: Optional[int] = None,
) -> List[VerificationReport]:
    """Run several verifiers; reports come back in input order.

    A mutation is applied to the chain verifier only.
    """
    def run(theorem: TheoremId) -> VerificationReport:
        return verify_theorem(theorem, scope, mutation if theorem == TheoremId.IMPLICATION_CHAIN else None)

    return parallel_map(run, list(theorems), threads or settings.THREADS)
