"""Property-suite runner behind the command-line ``verify``.

Every structural and colouring law the library relies on is checked here
over a coefficient grid (quadratic a in 1..3, b and c in 0..2, plus the
constant/linear oracle polynomials), with brute-force oracles on the small
orders.  The runner reports one line per property; any counterexample
fails the run.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import braided, chroma, oracle
from .builder import JacoGraph, arcs, build
from .errors import HopeNotCompleteError
from .incidence import (
    FamilyClass,
    IncidencePolynomial,
    classify,
    evaluate,
    format_polynomial,
    forward_difference_bound,
    parse,
)
from .invariants import (
    completeness_threshold,
    component_decomposition,
    hope_subgraph,
    jaconian,
    smallest_with_max_degree,
    underlying_degrees,
)

QUADRATIC_GRID = tuple(
    IncidencePolynomial(a, b, c)
    for a in (1, 2, 3)
    for b in (0, 1, 2)
    for c in (0, 1, 2)
)

# the polynomials the colouring and arc oracles must agree on
ORACLE_POLYS = (
    IncidencePolynomial(1, 0, 0),   # x^2
    IncidencePolynomial(1, 0, 1),   # x^2 + 1
    IncidencePolynomial(2, 0, 0),   # 2x^2
    IncidencePolynomial(1, 1, 1),   # x^2 + x + 1
    IncidencePolynomial(0, 0, 3),   # constant 3
    IncidencePolynomial(0, 1, 0),   # x
)

X_SQUARED = IncidencePolynomial(1, 0, 0)

_MAX_REPORTED = 5


@dataclass
class PropertyResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        self.checks += 1
        if not condition and len(self.failures) < _MAX_REPORTED:
            self.failures.append(message)


@dataclass
class VerifyConfig:
    polynomials: tuple[IncidencePolynomial, ...] | None = None  # None = default grid
    n_max: int = 200
    colouring_n_max: int = 12

    def structural_polys(self) -> tuple[IncidencePolynomial, ...]:
        if self.polynomials is not None:
            return self.polynomials
        seen = list(QUADRATIC_GRID)
        for p in ORACLE_POLYS:
            if p not in seen:
                seen.append(p)
        return tuple(seen)

    def quadratic_polys(self) -> tuple[IncidencePolynomial, ...]:
        return tuple(p for p in self.structural_polys() if p.a >= 1)

    def oracle_polys(self) -> tuple[IncidencePolynomial, ...]:
        if self.polynomials is not None:
            return self.polynomials
        return ORACLE_POLYS

    def includes_x_squared(self) -> bool:
        return self.polynomials is None or X_SQUARED in self.polynomials


def _degrees_at(g: JacoGraph, k: int) -> list[int]:
    """Underlying degrees of the order-k prefix, from the full build."""
    return [
        g.in_degrees[i - 1] + max(0, min(g.reaches[i - 1], k) - i)
        for i in range(1, k + 1)
    ]


def _label(p: IncidencePolynomial) -> str:
    return format_polynomial(p)


def prop_forward_difference(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("forward-difference")
    for p in cfg.structural_polys():
        for x in range(1, min(cfg.n_max, 200)):
            diff = evaluate(p, x + 1) - evaluate(p, x)
            expected = p.a * (2 * x + 1) + p.b
            res.check(diff == expected, f"{_label(p)}: f({x + 1})-f({x}) = {diff} != {expected}")
            res.check(
                forward_difference_bound(p, x + 1) == diff,
                f"{_label(p)}: difference bound at {x + 1} differs from the exact difference",
            )
    return res


def prop_parse_roundtrip(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("parse-roundtrip")
    extras = (
        IncidencePolynomial(0, 0, 0),
        IncidencePolynomial(0, 0, 5),
        IncidencePolynomial(7, 0, 3),
        IncidencePolynomial(0, 4, 0),
    )
    for p in cfg.structural_polys() + extras:
        text = format_polynomial(p)
        res.check(parse(text) == p, f"parse({text!r}) != {p}")
    return res


def prop_definitional_replay(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("definitional-replay")
    n = min(cfg.n_max, 200)
    for p in cfg.structural_polys():
        fast = arcs(build(p, n))
        literal = oracle.arcs_by_definition(p, n)
        res.check(
            fast == literal,
            f"{_label(p)}: builder arcs differ from the definitional oracle at n={n}",
        )
    return res


def prop_reach_monotone(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("reach-monotone")
    for p in cfg.structural_polys():
        g = build(p, cfg.n_max)
        r = g.reaches
        non_dec = all(r[i] <= r[i + 1] for i in range(len(r) - 1))
        res.check(non_dec, f"{_label(p)}: reach decreases somewhere below n={cfg.n_max}")
        if p.a >= 1:
            strict = all(r[i] < r[i + 1] for i in range(len(r) - 1))
            res.check(strict, f"{_label(p)}: quadratic reach fails to strictly increase")
    return res


def prop_indegree_steps(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("indegree-steps")
    for p in cfg.quadratic_polys():
        g = build(p, cfg.n_max)
        d = g.in_degrees
        res.check(
            all(d[i + 1] - d[i] in (0, 1) for i in range(len(d) - 1)),
            f"{_label(p)}: in-degree step outside {{0, 1}}",
        )
    return res


def prop_outdegree_distinct(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("outdegree-distinct")
    strict_everywhere = True
    for p in cfg.quadratic_polys():
        g = build(p, cfg.n_max)
        outs = [r - i for i, r in enumerate(g.reaches, start=1)]
        res.check(
            all(outs[i] != outs[i + 1] for i in range(len(outs) - 1)),
            f"{_label(p)}: equal consecutive root out-degrees",
        )
        if not all(outs[i] < outs[i + 1] for i in range(len(outs) - 1)):
            strict_everywhere = False
    if strict_everywhere and cfg.quadratic_polys():
        res.notes.append("root out-degrees were strictly increasing in every checked graph")
    return res


def prop_truncation_coherence(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("truncation-coherence")
    for p in cfg.structural_polys():
        full = build(p, cfg.n_max)
        for m in {1, 2, cfg.n_max // 3 or 1, cfg.n_max // 2 or 1, cfg.n_max}:
            part = build(p, m)
            res.check(
                part.in_degrees == full.in_degrees[:m]
                and part.reaches == full.reaches[:m],
                f"{_label(p)}: truncation to {m} changed in-degrees or reaches",
            )
            res.check(
                all(part.out_degree(i) == min(part.reach(i), m) - i for i in range(1, m + 1)),
                f"{_label(p)}: finite out-degree differs from min(reach, n) - i at n={m}",
            )
    return res


def prop_delta_monotone(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("delta-monotone")
    for p in cfg.structural_polys():
        g = build(p, cfg.n_max)
        previous = 0
        ok = True
        for k in range(1, cfg.n_max + 1):
            delta = max(_degrees_at(g, k))
            if delta < previous:
                ok = False
                break
            previous = delta
        res.check(ok, f"{_label(p)}: maximum degree dropped when growing to order {k}")
    return res


def prop_min_degree_bound(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("min-degree-bound")
    for p in cfg.structural_polys():
        g = build(p, cfg.n_max)
        f1 = evaluate(p, 1)
        ok = all(0 <= min(_degrees_at(g, k)) <= f1 for k in range(1, cfg.n_max + 1))
        res.check(ok, f"{_label(p)}: minimum degree left the range 0..f(1)")
    return res


def prop_prime_full_degree_prefix(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("prime-full-degree-prefix")
    for p in cfg.structural_polys():
        g = build(p, cfg.n_max)
        for k in range(1, cfg.n_max + 1):
            degrees = _degrees_at(g, k)
            delta = max(degrees)
            prime = degrees.index(delta) + 1
            if degrees[prime - 1] == evaluate(p, prime):
                res.check(
                    all(degrees[m - 1] == evaluate(p, m) for m in range(1, prime)),
                    f"{_label(p)}, n={k}: prime at full degree but an earlier vertex is not",
                )
    return res


def prop_milestone_prime(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("milestone-prime")
    for p in cfg.quadratic_polys():
        g = build(p, cfg.n_max)
        for n in range(2, cfg.n_max + 1):
            milestone = next(
                (i for i in range(1, n) if g.reaches[i - 1] == n), None
            )
            if milestone is None:
                continue
            degrees = _degrees_at(g, n)
            delta = max(degrees)
            prime = degrees.index(delta) + 1
            res.check(
                prime == milestone,
                f"{_label(p)}, n={n}: vertex {milestone} has reach n but prime is {prime}",
            )
    return res


def prop_completeness_threshold(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("completeness-threshold")
    for p in cfg.structural_polys():
        thr = completeness_threshold(p)
        for k in range(1, min(thr, cfg.n_max) + 1):
            g = build(p, k)
            degrees = underlying_degrees(g)
            complete = all(d == k - 1 for d in degrees)
            rep = jaconian(g)
            res.check(
                complete and rep.max_degree == k - 1 and len(rep.jaconian_set) == k,
                f"{_label(p)}: order {k} <= f(1)+1 = {thr} is not complete",
            )
        if thr < cfg.n_max:
            g = build(p, thr + 1)
            res.check(
                any(d != thr for d in underlying_degrees(g)),
                f"{_label(p)}: order {thr + 1} > f(1)+1 is still complete",
            )
    return res


def prop_degree_jump_bound(cfg: VerifyConfig) -> PropertyResult:
    # a quadratic-family law: constant incidence breaks it at block boundaries
    res = PropertyResult("degree-jump-bound")
    for p in cfg.quadratic_polys():
        g = build(p, cfg.n_max)
        ok = True
        for k in range(2, cfg.n_max + 1):
            degrees = _degrees_at(g, k)
            if any(
                abs(degrees[i - 1] - degrees[i - 2]) > p.a * (2 * i - 1) + p.b
                for i in range(2, k + 1)
            ):
                ok = False
                break
        res.check(ok, f"{_label(p)}: degree jump exceeded a(2i-1)+b at order {k}")
    return res


def prop_jaconian_plateau(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("jaconian-plateau")
    if not cfg.includes_x_squared():
        res.notes.append("defined for x^2 only; skipped for this polynomial selection")
        return res
    g = build(X_SQUARED, cfg.n_max + 1)
    for n in range(1, cfg.n_max):
        if g.in_degrees[n - 1] == g.in_degrees[n]:
            size_n = _degrees_at(g, n).count(max(_degrees_at(g, n)))
            size_next = _degrees_at(g, n + 1).count(max(_degrees_at(g, n + 1)))
            res.check(
                size_n != size_next,
                f"x^2: in-degree plateau at {n} but the Jaconian set kept size {size_n}",
            )
    return res


def prop_hope_complete(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("hope-complete")
    for p in cfg.quadratic_polys():
        ok = True
        for n in range(1, cfg.n_max + 1):
            try:
                hope_subgraph(build(p, n))
            except HopeNotCompleteError:
                ok = False
                break
        res.check(ok, f"{_label(p)}: Hope subgraph not complete at order {n}")
    return res


def prop_locator(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("smallest-max-degree-locator")
    for p in cfg.quadratic_polys():
        k, prime, delta = smallest_with_max_degree(p)
        swept = oracle.sweep_smallest_max_degree(p, delta)
        res.check(
            k == swept,
            f"{_label(p)}: locator gives {k} but the sweep found {swept}",
        )
        f1 = evaluate(p, 1)
        superseded = evaluate(p, f1) - f1 + 1
        if superseded != k:
            res.notes.append(
                f"{_label(p)}: k = f(f(1))+1 = {k} (prime v{prime}, degree {delta});"
                f" the superseded form f(f(1))-f(1)+1 = {superseded} misses"
            )
    return res


def prop_component_structure(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("component-structure")
    n = min(cfg.n_max, 60)
    for p in cfg.structural_polys():
        comps = component_decomposition(build(p, n))
        family = classify(p)
        if family is FamilyClass.CONSTANT and p.c == 0:
            res.check(
                len(comps) == n,
                f"{_label(p)}: zero polynomial should give {n} singletons",
            )
        elif family is FamilyClass.CONSTANT:
            size = p.c + 1
            expected = [
                range(s, min(s + size, n + 1)) for s in range(1, n + 1, size)
            ]
            res.check(
                comps == expected,
                f"{_label(p)}: constant components are not consecutive K_{size} blocks",
            )
        else:
            res.check(len(comps) == 1, f"{_label(p)}: connected family split into components")
    return res


def prop_oracle_colouring(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("oracle-colouring")
    for p in cfg.oracle_polys():
        for n in range(1, cfg.colouring_n_max + 1):
            g = build(p, n)
            res.check(
                arcs(g) == oracle.arcs_by_definition(p, n),
                f"{_label(p)}, n={n}: arc sets disagree",
            )
            underlying = chroma.underlying_graph(g)
            colouring = chroma.min_sum_colouring(underlying)
            exp_sum, exp_weights = oracle.exhaustive_min_sum(underlying)
            res.check(
                chroma.colour_sum(colouring) == exp_sum
                and colouring.weights == exp_weights,
                f"{_label(p)}, n={n}: solver gives"
                f" {chroma.colour_sum(colouring)} {colouring.weights},"
                f" oracle {exp_sum} {exp_weights}",
            )
    return res


def prop_complete_graph_sums(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("complete-graph-sums")
    for n in range(1, 51):
        report = chroma.chroma_report(chroma.SimpleGraph.complete(n))
        total, mean, variance = braided.complete_graph_stats(n)
        res.check(
            report.chi_minus == total
            and report.chi_plus == total
            and report.mu_minus == mean
            and report.mu_plus == mean
            and report.var_minus == variance
            and report.var_plus == variance,
            f"K_{n}: engine disagrees with the closed forms",
        )
    return res


def prop_reversal_identity(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("reversal-identity")
    for p in cfg.oracle_polys():
        for n in range(1, cfg.colouring_n_max + 1):
            underlying = chroma.underlying_graph(build(p, n))
            report = chroma.chroma_report(underlying)
            res.check(
                report.chi_minus + report.chi_plus == (report.chi + 1) * n,
                f"{_label(p)}, n={n}: reversal identity broken",
            )
            colouring = chroma.min_sum_colouring(underlying)
            mean, variance = chroma.chromatic_stats(colouring)
            rmean, rvariance = chroma.chromatic_stats(chroma.reverse_colouring(colouring))
            res.check(
                rmean == (colouring.k + 1) - mean and rvariance == variance,
                f"{_label(p)}, n={n}: reversed-colouring statistics relation broken",
            )
    return res


def prop_greedy_agreement(cfg: VerifyConfig) -> PropertyResult:
    """Empirical: the iterated maximum-independent-set colouring matches the
    exact optimum on the reference quadratic family.  A divergence is
    reported as a failure so it cannot pass silently."""
    res = PropertyResult("greedy-agreement")
    if not cfg.includes_x_squared():
        res.notes.append("defined for x^2 only; skipped for this polynomial selection")
        return res
    for i in range(1, 21):
        g = chroma.underlying_graph(build(X_SQUARED, i))
        exact = chroma.min_sum_colouring(g)
        greedy = chroma.greedy_min_sum(g)
        res.check(
            greedy.weights == exact.weights
            and chroma.colour_sum(greedy) == chroma.colour_sum(exact),
            f"x^2, n={i}: greedy gives {greedy.weights}, exact optimum {exact.weights}",
        )
    return res


def prop_braided_closed_forms(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("braided-closed-forms")
    for n in range(1, 12):
        for m in range(1, n + 1):
            for l in range(0, m + 1):
                if n + m - l > 12:
                    continue
                graph = braided.realize(braided.BraidedString((n, m), (l,)))
                report = chroma.chroma_report(graph)
                res.check(
                    report.mu_minus == braided.mu_min_two_block(n, m, l)
                    and report.mu_plus == braided.mu_max_two_block(n, m, l),
                    f"blocks ({n}, {m}) overlap {l}: closed forms disagree with the engine",
                )
                res.check(
                    report.var_minus == report.var_plus,
                    f"blocks ({n}, {m}) overlap {l}: variances differ",
                )
                swapped = chroma.chroma_report(braided.realize(braided.BraidedString((m, n), (l,))))
                res.check(
                    swapped.chi_minus == report.chi_minus
                    and swapped.chi == report.chi
                    and swapped.chi_plus == report.chi_plus,
                    f"blocks ({n}, {m}) overlap {l}: braiding is not commutative",
                )
    return res


def prop_weight_evolution(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("weight-evolution")
    if not cfg.includes_x_squared():
        res.notes.append("defined for x^2 only; skipped for this polynomial selection")
        return res
    previous: tuple[int, ...] | None = None
    for i in range(1, 21):
        weights = chroma.min_sum_colouring(
            chroma.underlying_graph(build(X_SQUARED, i))
        ).weights
        if previous is not None:
            if len(weights) == len(previous) + 1:
                ok = weights[:-1] == previous and weights[-1] == 1
            elif len(weights) == len(previous):
                bumps = [j for j in range(len(weights)) if weights[j] != previous[j]]
                ok = len(bumps) == 1 and weights[bumps[0]] == previous[bumps[0]] + 1
            else:
                ok = False
            res.check(
                ok,
                f"x^2: weights changed irregularly from order {i - 1} to {i}:"
                f" {previous} -> {weights}",
            )
        previous = weights
    return res


def prop_variance_symmetry(cfg: VerifyConfig) -> PropertyResult:
    res = PropertyResult("variance-symmetry")
    if not cfg.includes_x_squared():
        res.notes.append("defined for x^2 only; skipped for this polynomial selection")
        return res
    for i in range(1, 21):
        report = chroma.chroma_report(chroma.underlying_graph(build(X_SQUARED, i)))
        res.check(
            report.var_minus == report.var_plus,
            f"x^2, n={i}: minimum and maximum variances differ",
        )
    return res


def prop_jaconian_contiguity(cfg: VerifyConfig) -> PropertyResult:
    """Observation only: the Jaconian set was a contiguous index block in
    every graph checked so far.  Never asserted."""
    res = PropertyResult("jaconian-contiguity")
    contiguous = 0
    total = 0
    for p in cfg.structural_polys():
        g = build(p, cfg.n_max)
        for k in range(1, cfg.n_max + 1):
            degrees = _degrees_at(g, k)
            delta = max(degrees)
            members = [i for i, d in enumerate(degrees, start=1) if d == delta]
            total += 1
            if members[-1] - members[0] + 1 == len(members):
                contiguous += 1
    res.checks = total
    res.notes.append(
        f"contiguous in {contiguous}/{total} graphs checked (observation, not asserted)"
    )
    return res


PROPERTIES = (
    ("forward-difference", prop_forward_difference),
    ("parse-roundtrip", prop_parse_roundtrip),
    ("definitional-replay", prop_definitional_replay),
    ("reach-monotone", prop_reach_monotone),
    ("indegree-steps", prop_indegree_steps),
    ("outdegree-distinct", prop_outdegree_distinct),
    ("truncation-coherence", prop_truncation_coherence),
    ("delta-monotone", prop_delta_monotone),
    ("min-degree-bound", prop_min_degree_bound),
    ("prime-full-degree-prefix", prop_prime_full_degree_prefix),
    ("milestone-prime", prop_milestone_prime),
    ("completeness-threshold", prop_completeness_threshold),
    ("degree-jump-bound", prop_degree_jump_bound),
    ("jaconian-plateau", prop_jaconian_plateau),
    ("hope-complete", prop_hope_complete),
    ("smallest-max-degree-locator", prop_locator),
    ("component-structure", prop_component_structure),
    ("oracle-colouring", prop_oracle_colouring),
    ("complete-graph-sums", prop_complete_graph_sums),
    ("reversal-identity", prop_reversal_identity),
    ("greedy-agreement", prop_greedy_agreement),
    ("braided-closed-forms", prop_braided_closed_forms),
    ("weight-evolution", prop_weight_evolution),
    ("variance-symmetry", prop_variance_symmetry),
    ("jaconian-contiguity", prop_jaconian_contiguity),
)


def available_properties() -> tuple[str, ...]:
    return tuple(name for name, _ in PROPERTIES)


def run(cfg: VerifyConfig | None = None, only: tuple[str, ...] | None = None) -> list[PropertyResult]:
    cfg = cfg or VerifyConfig()
    selected = []
    if only:
        known = dict(PROPERTIES)
        for name in only:
            if name not in known:
                raise ValueError(
                    f"unknown property {name!r}; known: {', '.join(available_properties())}"
                )
            selected.append((name, known[name]))
    else:
        selected = list(PROPERTIES)
    return [func(cfg) for _, func in selected]
