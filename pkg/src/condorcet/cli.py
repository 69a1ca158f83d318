"""Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or unreadable
input, 3 a resource guard refused the request.
"""

from __future__ import annotations

import argparse
import itertools
import json
import statistics
import sys
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from random import Random
from typing import Callable, Optional

from . import __version__
from .analyze import classify, is_peak_pit
from .dyck import dyck_words, mu, mu_inverse, part_size_table, split_parts
from .enumerate_all import (
    domain_flags,
    enumerate_maximal_condorcet,
    isomorphism_classes,
)
from .generate import count_domain, domain_satisfies, generate_domain
from .graph import (
    build_betweenness_graph,
    build_swap_graph,
    edges_csv,
    export_dot,
    is_median_graph,
    median_check,
)
from .model import (
    Domain,
    NeverCondition,
    ResourceGuardError,
    dump_domain,
    load_domain,
    parse_order,
    reverse_complement,
)
from .schemes import (
    NAMED_SET_KINDS,
    Scheme,
    fishburn_scheme,
    make_scheme,
    named_set,
    read_scheme,
    set_alternating_scheme,
)
from .sizes import (
    catalan,
    even_scheme_size,
    even_scheme_size_is_odd,
    fib_common_size,
    growth_report,
    half_set,
    size_half_set,
    size_recursive,
    size_single_closed,
    size_suffix_set,
)

DEFAULT_RNG_SEED = 1729
SCAN_ENUMERATE_N_CAP = 14
SCAN_RECURSE_N_CAP = 22
DYCK_N_CAP = 18
MONTECARLO_N_CAP = 26

# Verification targets: tabulated domain sizes for the four reference
# families, columns (odd, even, truncated-even, fishburn).
REFERENCE_SIZES = {
    4: (9, 9, 8, 9),
    5: (19, 18, 19, 20),
    6: (42, 42, 39, 45),
    7: (91, 84, 91, 100),
    8: (202, 199, 190, 222),
    9: (437, 398, 437, 488),
    10: (973, 950, 922, 1069),
    11: (2102, 1900, 2102, 2324),
    12: (4690, 4554, 4464, 5034),
    13: (10122, 9108, 10122, 10840),
    14: (22617, 21884, 21587, 23266),
    15: (48779, 43768, 48779, 49704),
    16: (109104, 105323, 104322, 105884),
    17: (235197, 210646, 235197, 224720),
    18: (526441, 507398, 503966, 475773),
    19: (1134474, 1014796, 1134474, 1004212),
    20: (2540586, 2446022, 2434088, 2115186),
}
REFERENCE_COLUMNS = ("odd", "even", "truncated-even", "fishburn")

# A 19-order non-bipartite peak-pit domain on six alternatives, used as a
# fixed verification target for the analyzer.
NONBIPARTITE_19 = (
    "123456 123546 123564 125346 125364 125634 152346 152364 152634 "
    "156234 165234 615234 651234 652134 652314 652341 652431 654231 654321"
).split()

# Word/prefix pairs pinned by the bijection for part 2.
DYCK_WORD_PAIRS = {
    "1324": "ududud",
    "1342": "uduudd",
    "3124": "uuddud",
    "3142": "uududd",
    "3412": "uuuddd",
}


def _parse_set(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        members = [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"bad set {text!r}: expected comma separated integers")
    if any(m < 1 for m in members):
        raise ValueError(f"bad set {text!r}: members must be positive")
    return members


def _write_text(path: Optional[str], text: str) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _scheme_from_args(args) -> Scheme:
    if args.scheme_file:
        scheme = read_scheme(Path(args.scheme_file).read_text())
        if args.n is not None and args.n != scheme.n:
            raise ValueError(f"--n {args.n} disagrees with the scheme file (n {scheme.n})")
        return scheme
    if args.n is None:
        raise ValueError("--n is required unless --scheme-file is given")
    if args.fishburn:
        return fishburn_scheme(args.n, args.variant)
    if args.named:
        return set_alternating_scheme(named_set(args.named, args.n), args.n)
    return set_alternating_scheme(_parse_set(args.set), args.n)


def cmd_generate(args) -> int:
    scheme = _scheme_from_args(args)
    if args.count_only:
        print(count_domain(scheme, jobs=args.jobs))
        return 0
    domain = generate_domain(scheme, jobs=args.jobs)
    _write_text(args.out, dump_domain(domain))
    return 0


def cmd_analyze(args) -> int:
    domain = load_domain(Path(args.domain).read_text())
    report = classify(domain)
    if args.json:
        print(json.dumps(report.as_dict(), indent=2))
    else:
        print(report.format_text())
    return 0


def cmd_size(args) -> int:
    if args.batch:
        lines = ["n,set,size"]
        for lineno, raw in enumerate(Path(args.batch).read_text().splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, sep, tail = line.partition(";")
            if not sep:
                raise ValueError(f"batch line {lineno}: expected 'n;members'")
            n = int(head)
            members = sorted(set(_parse_set(tail)))
            lines.append(f"{n},{' '.join(map(str, members))},{size_recursive(members, n)}")
        _write_text(args.out, "\n".join(lines) + "\n")
        return 0
    if args.n is None or args.set is None:
        raise ValueError("size needs --n and --set together, or --batch")
    print(size_recursive(_parse_set(args.set), args.n))
    return 0


@dataclass(frozen=True)
class ScanRecord:
    members: tuple[int, ...]
    set_size: int
    domain_size: int


def run_scan(n: int, engine: str) -> list[ScanRecord]:
    """Sizes of every set-alternating domain on n alternatives.

    Engine 'recurse' is pure arithmetic; 'enumerate' builds each domain
    and counts, which is slower but independent of the recurrence.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if engine == "enumerate":
        if n > SCAN_ENUMERATE_N_CAP:
            raise ResourceGuardError(
                f"scan --engine enumerate needs n <= {SCAN_ENUMERATE_N_CAP}, got {n}"
            )
        counter: Callable = lambda a: count_domain(set_alternating_scheme(a, n))
    elif engine == "recurse":
        if n > SCAN_RECURSE_N_CAP:
            raise ResourceGuardError(
                f"scan --engine recurse needs n <= {SCAN_RECURSE_N_CAP}, got {n}"
            )
        counter = lambda a: size_recursive(a, n)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    records = []
    pool = range(2, n)
    for r in range(len(pool) + 1):
        for members in itertools.combinations(pool, r):
            records.append(ScanRecord(members, r, counter(members)))
    return records


def cmd_scan(args) -> int:
    records = run_scan(args.n, args.engine)
    lines = ["set,set_size,domain_size"]
    lines += [f"{' '.join(map(str, r.members))},{r.set_size},{r.domain_size}" for r in records]
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _census_lines(domains) -> list[str]:
    rows: Counter = Counter()
    for d in domains:
        f = domain_flags(d)
        rows[(len(d), f["peak_pit"], f["bipartite"], f["midpoint_bipartite"])] += 1
    lines = ["size,count,peak_pit,bipartite,midpoint_bipartite"]
    for (size, pp, bip, mbb), count in sorted(rows.items(), key=lambda kv: (-kv[0][0], kv[0][1:])):
        flags = ",".join(str(v).lower() for v in (pp, bip, mbb))
        lines.append(f"{size},{count},{flags}")
    return lines


def cmd_enumerate(args) -> int:
    domains = enumerate_maximal_condorcet(args.n)
    classes = isomorphism_classes(domains)
    reps = [g[0] for g in classes]
    outdir = Path(args.out)
    (outdir / "domains").mkdir(parents=True, exist_ok=True)
    width = len(str(len(reps)))
    for idx, rep in enumerate(reps, start=1):
        name = f"domain_{idx:0{width}d}_size{len(rep)}.txt"
        (outdir / "domains" / name).write_text(dump_domain(rep))
    (outdir / "census.csv").write_text("\n".join(_census_lines(domains)) + "\n")
    (outdir / "census_iso.csv").write_text("\n".join(_census_lines(reps)) + "\n")
    print(f"maximal Condorcet domains: {len(domains)} ({len(reps)} up to isomorphism)")
    print(f"wrote {len(reps)} class representatives and two census files to {outdir}")
    return 0


def cmd_graph(args) -> int:
    domain = load_domain(Path(args.domain).read_text())
    g = build_swap_graph(domain)
    report = print if args.out else (lambda *a: print(*a, file=sys.stderr))
    _write_text(args.out, export_dot(g))
    if args.edges_csv:
        Path(args.edges_csv).write_text(edges_csv(g))
    report(f"graph: {g.vertex_count} vertices, {g.edge_count} edges")
    rc = 0
    if args.check_median:
        ok, witness = median_check(g)
        if ok:
            report("median: true")
        else:
            rc = 1
            where = "" if witness is None else " witness " + " ".join(map(str, witness))
            report(f"median: false{where}")
    return rc


def cmd_dyck(args) -> int:
    n = args.n
    if n < 2 or n % 2:
        raise ValueError("--n must be even and at least 2")
    if n > DYCK_N_CAP:
        raise ResourceGuardError(f"dyck needs n <= {DYCK_N_CAP}, got {n}")
    domain = generate_domain(set_alternating_scheme(range(2, n - 1, 2), n))
    parts = split_parts(domain)
    table = part_size_table(n)
    lines = ["k,part_size,catalan_times_a"]
    ok = True
    for k, formula in table:
        actual = len(parts[k]) if k in parts else 0
        ok = ok and actual == formula
        lines.append(f"{k},{actual},{formula}")
    _write_text(args.out, "\n".join(lines) + "\n")
    if not args.verify:
        return 0
    report = print if args.out else (lambda *a: print(*a, file=sys.stderr))
    if sum(len(d) for d in parts.values()) != even_scheme_size(n):
        ok = False
    for k, d in parts.items():
        image = {mu_inverse(w) for w in dyck_words(k + 1)}
        if {o[: 2 * k] for o in d} != image:
            ok = False
            report(f"part {k}: top segments differ from the word image")
    report("dyck: ok" if ok else "dyck: MISMATCH")
    return 0 if ok else 1


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _mutate_scheme(scheme: Scheme) -> Scheme:
    """Flip one never condition (the deliberate negative control)."""
    target = (1, 2, 4)
    swap = {NeverCondition(1, 3): NeverCondition(3, 1), NeverCondition(3, 1): NeverCondition(1, 3)}
    amap = dict(scheme.assignment)
    amap[target] = frozenset(swap.get(c, c) for c in amap[target])
    return make_scheme(scheme.n, amap, origin="mutated")


def _check_size_table(stretch, inject_mutation, jobs, sizes_out) -> CheckResult:
    n_hi = 20 if stretch else 14
    bad = []
    for n in range(4, n_hi + 1):
        for col, kind in enumerate(REFERENCE_COLUMNS):
            want = REFERENCE_SIZES[n][col]
            if kind == "fishburn":
                scheme = fishburn_scheme(n)
            else:
                members = named_set(kind, n)
                scheme = set_alternating_scheme(members, n)
                if size_recursive(members, n) != want:
                    bad.append(f"{kind} n={n}: recurrence disagrees")
            if inject_mutation and kind == "odd" and n == 8:
                scheme = _mutate_scheme(scheme)
            got = count_domain(scheme, jobs=jobs)
            sizes_out[(kind, n)] = got
            if got != want:
                bad.append(f"{kind} n={n}: generated {got}, reference {want}")
    detail = f"n=4..{n_hi}, {len(REFERENCE_COLUMNS)} families, generation vs tabulated counts"
    if bad:
        detail = "; ".join(bad[:4])
    return CheckResult("size-table", not bad, detail)


def _check_crossover(stretch, sizes) -> CheckResult:
    bad = []
    if sizes[("odd", 4)] != sizes[("fishburn", 4)]:
        bad.append("n=4: expected equal sizes")
    for n in range(5, 15):
        if not sizes[("odd", n)] < sizes[("fishburn", n)]:
            bad.append(f"n={n}: odd not smaller")
    hi = []
    if stretch:
        if not sizes[("odd", 15)] < sizes[("fishburn", 15)]:
            bad.append("n=15: odd not smaller")
        for n in range(16, 21):
            if not sizes[("odd", n)] > sizes[("fishburn", n)]:
                bad.append(f"n={n}: odd not larger")
        hi = [", crossover confirmed between 15 and 16"]
    detail = "equal at n=4, odd smaller for 5..14" + "".join(hi)
    if bad:
        detail = "; ".join(bad[:4])
    return CheckResult("size-crossover", not bad, detail)


def _check_fixture19() -> CheckResult:
    domain = Domain([parse_order(s) for s in NONBIPARTITE_19])
    t0 = time.time()
    report = classify(domain)
    elapsed = time.time() - t0
    bad = []
    if not (report.n == 6 and report.size == 19):
        bad.append("wrong shape")
    for flag in ("is_condorcet", "is_peak_pit", "is_connected", "has_maximal_width", "is_maximal"):
        if getattr(report, flag) is not True:
            bad.append(f"{flag} should hold")
    if report.bipartition is not None:
        bad.append(f"unexpected bipartition {sorted(report.bipartition)}")
    if report.midpoint_bipartition is not None:
        bad.append("unexpected midpoint bipartition")
    detail = f"19 orders: maximal connected peak-pit, no bipartition ({elapsed:.2f}s)"
    if bad:
        detail = "; ".join(bad)
    return CheckResult("fixture-19-orders", not bad, detail)


def _census_pairs(domains) -> dict[int, int]:
    out: Counter = Counter()
    for d in domains:
        out[len(d)] += 1
    return dict(out)


def _check_census(n, want_total, want_iso, want_mbb) -> CheckResult:
    t0 = time.time()
    domains = enumerate_maximal_condorcet(n)
    pp = [d for d in domains if is_peak_pit(d)]
    reps = [g[0] for g in isomorphism_classes(pp)]
    mbb = _census_pairs(r for r in reps if domain_flags(r)["midpoint_bipartite"])
    elapsed = time.time() - t0
    bad = []
    if len(domains) != want_total:
        bad.append(f"{len(domains)} maximal domains, expected {want_total}")
    if len(reps) != want_iso:
        bad.append(f"{len(reps)} peak-pit classes, expected {want_iso}")
    if mbb != want_mbb:
        bad.append(f"midpoint census {sorted(mbb.items())}, expected {sorted(want_mbb.items())}")
    detail = (
        f"{len(domains)} maximal, {len(reps)} peak-pit classes, "
        f"midpoint census matches ({elapsed:.1f}s)"
    )
    if bad:
        detail = "; ".join(bad)
    return CheckResult(f"census-n{n}", not bad, detail)


def _check_graph6() -> CheckResult:
    domain = generate_domain(set_alternating_scheme([2, 4], 6))
    g = build_swap_graph(domain)
    gb = build_betweenness_graph(domain)
    bad = []
    if (g.vertex_count, g.edge_count) != (42, 71):
        bad.append(f"{g.vertex_count} vertices / {g.edge_count} edges, expected 42/71")
    if g.edges != gb.edges or g.vertices != gb.vertices:
        bad.append("swap graph differs from betweenness graph")
    if not is_median_graph(g):
        bad.append("median property fails")
    detail = "42 vertices, 71 edges, swap equals betweenness, median graph"
    if bad:
        detail = "; ".join(bad)
    return CheckResult("graph-n6", not bad, detail)


def _check_dyck_table() -> CheckResult:
    bad = []
    domain = generate_domain(set_alternating_scheme([2, 4], 6))
    actual = {k: len(d) for k, d in split_parts(domain).items()}
    if actual != {1: 18, 2: 10, 3: 14}:
        bad.append(f"n=6 part sizes {actual}")
    if actual != dict(part_size_table(6)):
        bad.append("n=6 formula disagrees with the split")
    for prefix, word in DYCK_WORD_PAIRS.items():
        if mu(prefix, 2) != word or mu_inverse(word) != parse_order(prefix):
            bad.append(f"pair {prefix}/{word}")
    for k in range(1, 9):
        words = list(dyck_words(k + 1))
        if len(words) != catalan(k + 1):
            bad.append(f"word count at k={k}")
        if any(mu(mu_inverse(w), k) != w for w in words):
            bad.append(f"round trip fails at k={k}")
    for n in range(4, 21, 2):
        if even_scheme_size(n) != REFERENCE_SIZES[n][1]:
            bad.append(f"a({n}) off")
    for n in range(1, 129):
        if even_scheme_size_is_odd(n) != (even_scheme_size(n) % 2 == 1):
            bad.append(f"parity rule fails at n={n}")
    detail = "pinned word pairs, n=6 parts, round trips to k=8, sizes and parity to n=128"
    if bad:
        detail = "; ".join(bad[:4])
    return CheckResult("dyck-table", not bad, detail)


def _check_growth() -> CheckResult:
    bad = []
    target = 2 + 2 * 2 ** 0.5
    rows = growth_report(20)
    ratio = rows[-1][2]
    if not abs(ratio - target) / target < 0.005:
        bad.append(f"ratio {ratio:.6f} not within 0.5% of {target:.6f}")
    per_step = ratio ** 0.5
    if not abs(per_step - 2.197368) / 2.197368 < 0.005:
        bad.append(f"per-step growth {per_step:.6f} off")
    for n in range(4, 21):
        f = size_recursive(named_set("odd", n), n)
        if not even_scheme_size(n - 2) <= f <= even_scheme_size(n + 2):
            bad.append(f"odd size out of bounds at n={n}")
    detail = f"a(20)/a(18) = {ratio:.6f}, odd sizes inside [a(n-2), a(n+2)] for n<=20"
    if bad:
        detail = "; ".join(bad)
    return CheckResult("growth-rate", not bad, detail)


def _paper_tables_checks(stretch, inject_mutation, jobs) -> list[CheckResult]:
    sizes: dict = {}
    checks = [_check_size_table(stretch, inject_mutation, jobs, sizes)]
    checks.append(_check_crossover(stretch, sizes))
    checks.append(_check_fixture19())
    checks.append(_check_census(4, 495, 10, {9: 1, 8: 5}))
    if stretch:
        checks.append(_check_census(5, 140475, 181, {20: 2, 19: 4, 18: 2, 16: 14}))
    checks.append(_check_graph6())
    checks.append(_check_dyck_table())
    checks.append(_check_growth())
    return checks


def _random_subset(rng: Random, n: int) -> tuple[int, ...]:
    return tuple(m for m in range(2, n) if rng.random() < 0.5)


def _check_recurrence_vs_generation(rng, samples) -> CheckResult:
    bad = []
    for n in range(1, 10):
        for r in range(max(n - 2, 0) + 1):
            for members in itertools.combinations(range(2, n), r):
                if size_recursive(members, n) != count_domain(set_alternating_scheme(members, n)):
                    bad.append(f"n={n} A={members}")
    for _ in range(samples):
        n = rng.choice((10, 11, 12))
        members = _random_subset(rng, n)
        if size_recursive(members, n) != count_domain(set_alternating_scheme(members, n)):
            bad.append(f"n={n} A={members}")
    detail = f"exhaustive n<=9 plus {samples} random sets at n=10..12"
    if bad:
        detail = "; ".join(bad[:4])
    return CheckResult("recurrence-vs-generation", not bad, detail)


def _check_bound_and_symmetry() -> CheckResult:
    bad = []
    for n in range(1, 10):
        for r in range(max(n - 2, 0) + 1):
            for members in itertools.combinations(range(2, n), r):
                f = size_recursive(members, n)
                if f < 1 << (n - 1):
                    bad.append(f"below 2^(n-1): n={n} A={members}")
                # reversing every order and renaming x to n+1-x carries the
                # domain of A onto the domain of the mirrored complement
                partner = reverse_complement(members, n, normalize=True)
                if f != size_recursive(partner, n):
                    bad.append(f"reverse-complement asymmetry: n={n} A={members}")
    detail = "all sets, n<=9: size >= 2^(n-1) and reverse-complement symmetric"
    if bad:
        detail = "; ".join(bad[:4])
    return CheckResult("bound-and-symmetry", not bad, detail)


def _check_random_structure(rng, samples) -> CheckResult:
    from .analyze import is_condorcet, is_connected, is_copious, is_maximal

    bad = []
    for n in range(4, 8):
        for _ in range(samples):
            members = _random_subset(rng, n)
            d = generate_domain(set_alternating_scheme(members, n))
            for name, fn in (
                ("condorcet", is_condorcet),
                ("copious", is_copious),
                ("peak-pit", is_peak_pit),
                ("connected", is_connected),
                ("maximal", is_maximal),
            ):
                if not fn(d):
                    bad.append(f"n={n} A={members}: not {name}")
    detail = f"{samples} random sets per n in 4..7: copious peak-pit connected maximal"
    if bad:
        detail = "; ".join(bad[:4])
    return CheckResult("random-set-structure", not bad, detail)


def _check_common_part() -> CheckResult:
    from .generate import common_part_domain

    bad = []
    for n in range(1, 13):
        common = common_part_domain(n)
        if len(common) != fib_common_size(n):
            bad.append(f"n={n}: {len(common)} orders, expected {fib_common_size(n)}")
        if n <= 8:
            for r in range(max(n - 2, 0) + 1):
                for members in itertools.combinations(range(2, n), r):
                    if not domain_satisfies(common, set_alternating_scheme(members, n)):
                        bad.append(f"n={n}: not inside A={members}")
    detail = "Fibonacci sizes to n=12; contained in every scheme domain for n<=8"
    if bad:
        detail = "; ".join(bad[:4])
    return CheckResult("fibonacci-common-part", not bad, detail)


def _check_closed_forms() -> CheckResult:
    bad = []
    for n in range(3, 17):
        for k in range(2, n):
            if size_single_closed(k, n) != size_recursive([k], n):
                bad.append(f"single k={k} n={n}")
            if size_single_closed(n - k, n, anchored=True) != size_recursive([k], n):
                bad.append(f"anchored k={n - k} n={n}")
        for k in range(2, n):
            suffix = range(k, n)
            if size_suffix_set(k, n) != size_recursive(suffix, n):
                bad.append(f"suffix k={k} n={n}")
            if size_suffix_set(k, n) != 1 << (n - 1):
                bad.append(f"suffix value k={k} n={n}")
    expected_half = {2: 2, 4: 9, 6: 42, 8: 194, 10: 884, 12: 3978}
    for n in range(2, 17, 2):
        got = size_half_set(n)
        if got != size_recursive(half_set(n), n):
            bad.append(f"half set n={n} vs recurrence")
        if n in expected_half and got != expected_half[n]:
            bad.append(f"half set n={n}: {got}")
    # below the guard, compare against actual domains too
    for n in range(3, 10):
        for k in range(2, n):
            if size_single_closed(k, n) != count_domain(set_alternating_scheme([k], n)):
                bad.append(f"single vs domain k={k} n={n}")
            if size_suffix_set(k, n) != count_domain(set_alternating_scheme(range(k, n), n)):
                bad.append(f"suffix vs domain k={k} n={n}")
        if n % 2 == 0 and size_half_set(n) != count_domain(
            set_alternating_scheme(half_set(n), n)
        ):
            bad.append(f"half vs domain n={n}")
    detail = "singletons, anchored, suffix sets, half sets against the recurrence to n=16"
    if bad:
        detail = "; ".join(bad[:4])
    return CheckResult("closed-forms", not bad, detail)


def _check_random_median(rng, trials=50) -> CheckResult:
    bad = []
    done = 0
    while done < trials:
        n = rng.randrange(4, 12)
        members = _random_subset(rng, n)
        if size_recursive(members, n) > 2000:
            continue
        d = generate_domain(set_alternating_scheme(members, n))
        g = build_swap_graph(d)
        if g.edges != build_betweenness_graph(d).edges:
            bad.append(f"n={n} A={members}: graphs differ")
        if not is_median_graph(g):
            bad.append(f"n={n} A={members}: not median")
        done += 1
    detail = f"{trials} random domains up to 2000 orders: median, swap equals betweenness"
    if bad:
        detail = "; ".join(bad[:4])
    return CheckResult("random-median-graphs", not bad, detail)


def _properties_checks(rng_seed, samples) -> list[CheckResult]:
    rng = Random(rng_seed)
    return [
        _check_recurrence_vs_generation(Random(rng.random()), max(samples // 2, 20)),
        _check_bound_and_symmetry(),
        _check_random_structure(Random(rng.random()), samples),
        _check_common_part(),
        _check_closed_forms(),
        _check_random_median(Random(rng.random())),
    ]


def run_verify(
    suite: str,
    *,
    stretch: bool = False,
    inject_mutation: bool = False,
    rng_seed: int = DEFAULT_RNG_SEED,
    jobs: int = 1,
    samples: int = 200,
) -> list[CheckResult]:
    if suite == "paper-tables":
        return _paper_tables_checks(stretch, inject_mutation, jobs)
    if suite == "properties":
        return _properties_checks(rng_seed, samples)
    raise ValueError(f"unknown suite {suite!r}")


def cmd_verify(args) -> int:
    if args.inject_mutation and args.suite != "paper-tables":
        raise ValueError("--inject-mutation applies to the paper-tables suite")
    checks = run_verify(
        args.suite,
        stretch=args.stretch,
        inject_mutation=args.inject_mutation,
        rng_seed=args.rng_seed,
        jobs=args.jobs,
        samples=args.samples,
    )
    failed = [c for c in checks if not c.ok]
    for c in checks:
        print(f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.detail}")
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return 1 if failed else 0


def cmd_montecarlo(args) -> int:
    n, p = args.n, args.p
    if n > MONTECARLO_N_CAP:
        raise ResourceGuardError(f"montecarlo needs n <= {MONTECARLO_N_CAP}, got {n}")
    if not 0 <= p <= 1:
        raise ValueError("--p must lie in [0, 1]")
    if args.samples < 1:
        raise ValueError("--samples must be positive")
    rng = Random(args.rng_seed)
    sizes = []
    for _ in range(args.samples):
        members = [m for m in range(2, n) if rng.random() < p]
        sizes.append(size_recursive(members, n))
    sizes.sort()
    q = statistics.quantiles(sizes, n=4) if len(sizes) >= 2 else [sizes[0]] * 3
    lines = [
        "stat,value",
        f"n,{n}",
        f"p,{p}",
        f"samples,{args.samples}",
        f"seed,{args.rng_seed}",
        f"min,{sizes[0]}",
        f"q1,{q[0]}",
        f"median,{q[1]}",
        f"q3,{q[2]}",
        f"max,{sizes[-1]}",
        f"mean,{statistics.fmean(sizes)}",
        f"floor,{1 << (n - 1)}",
    ]
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="condorcet",
        description="Condorcet domains from never-condition schemes.",
    )
    parser.add_argument("--version", action="version", version=f"condorcet {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build the domain of a scheme")
    p.add_argument("--n", type=int)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--set", help="comma separated members of the defining set")
    src.add_argument("--named", choices=NAMED_SET_KINDS)
    src.add_argument("--scheme-file", help="path to a scheme description")
    src.add_argument("--fishburn", action="store_true")
    p.add_argument("--variant", choices=("even", "odd"), default="even",
                   help="which midpoint parity is never bottom (fishburn only)")
    p.add_argument("--out", help="write the domain here instead of stdout")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="classify a domain file")
    p.add_argument("--domain", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("size", help="count a domain without building it")
    p.add_argument("--n", type=int)
    p.add_argument("--set")
    p.add_argument("--batch", help="file with one 'n;a,b,c' request per line")
    p.add_argument("--out")
    p.set_defaults(func=cmd_size)

    p = sub.add_parser("scan", help="sizes for every defining set at one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--engine", choices=("enumerate", "recurse"), required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("enumerate", help="all maximal Condorcet domains at small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("graph", help="permutohedron-style graph of a domain")
    p.add_argument("--domain", required=True)
    p.add_argument("--out", help="write DOT here instead of stdout")
    p.add_argument("--edges-csv")
    p.add_argument("--check-median", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("dyck", help="part decomposition of the even scheme domain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dyck)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("paper-tables", "properties"), required=True)
    p.add_argument("--stretch", action="store_true", help="include the long-running extras")
    p.add_argument("--inject-mutation", action="store_true",
                   help="flip one never condition so the suite must fail")
    p.add_argument("--rng-seed", type=int, default=DEFAULT_RNG_SEED)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("montecarlo", help="size statistics over random defining sets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5, help="inclusion probability per element")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--rng-seed", type=int, default=DEFAULT_RNG_SEED)
    p.add_argument("--out")
    p.set_defaults(func=cmd_montecarlo)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceGuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
