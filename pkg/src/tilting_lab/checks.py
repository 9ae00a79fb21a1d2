"""
Verification suites shared by the command line and the test suite.

Each suite returns a ``SuiteResult`` whose ``failures`` list names the first
few offending cases.  Suites only read ``n`` and (for the poset suites) an
optional poset, so the order relation can be corrupted on purpose.
"""

from dataclasses import dataclass, field

from .algebra import projective_rep, simple_rep, standard_rep
from .filtration import (
    M_of,
    classify_module,
    exceptional_closed_form,
    in_f_delta_parity,
    in_f_nabla_parity,
    self_orthogonal_closed_form,
)
from .homology import decompose, ext_dims, min_resolution, projective_cover
from .morphisms import hom_dim, kernel
from .oracles import (
    cover_oracle,
    dim_hom_oracle_MM,
    dim_hom_oracle_proj,
    dim_hom_oracle_std,
    ext_oracle_delta_to_simple,
    ext_oracle_eq1,
    ext_oracle_eq2,
    ext_oracle_eq3,
    ext_simples_oracle,
    kernel_table_oracle,
    simple_resolution_oracle,
)
from .sequences import enumerate_sequences, exhaustive_cross_check, verify_sequence
from .strings import check_bijection, count_indecomposables, enumerate_indecomposables, omega
from .tilting import (
    antichain_modules,
    build_poset,
    classify_tilting,
    order_isomorphism_check,
)

MAX_REPORTED = 10


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0

    @property
    def passed(self):
        return self.failure_count == 0

    def record(self, ok, detail):
        self.checked += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_REPORTED:
                self.failures.append(detail)

    def as_dict(self):
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "failure_count": self.failure_count, "failures": self.failures}


def _padded(dims, m):
    return dims[m] if m < len(dims) else 0


def _multiset(ds):
    return sorted((d, ds.count(d)) for d in set(ds))


def catalogue_suite(n):
    r = SuiteResult("catalogue")
    size = len(enumerate_indecomposables(n))
    r.record(size == count_indecomposables(n) == n * (n + 1) * (2 * n + 1) // 6,
             {"catalogue": size, "formula": n * (n + 1) * (2 * n + 1) // 6})
    searched, described = check_bijection(n)
    r.record(searched == described, {"reason": "V-sequences do not match the descriptors",
                                     "unmatched": len(searched ^ described)})
    return r


def kernel_table_suite(n):
    r = SuiteResult("kernel-table")
    ds = enumerate_indecomposables(n)
    reps = [omega(d, n) for d in ds]
    for d in ds:
        cover = projective_cover(omega(d, n))
        r.record(sorted(cover.proj.generators) == cover_oracle(*d, n),
                 {"descriptor": d, "part": "cover"})
        K, _ = kernel(cover.map)
        got = sorted(decompose(K, reps, ds).items())
        want = _multiset(kernel_table_oracle(*d, n))
        r.record(got == want, {"descriptor": d, "part": "kernel",
                               "computed": [g[0] for g in got for _ in range(g[1])],
                               "table": kernel_table_oracle(*d, n)})
    return r


def simple_resolution_suite(n):
    r = SuiteResult("simple-resolutions")
    top = 2 * n - 1
    for i in range(1, n + 1):
        res = min_resolution(simple_rep(i, n))
        for m in range(top + 1):
            got = sorted(res.terms[m].generators) if m < len(res.terms) else []
            r.record(got == simple_resolution_oracle(i, m, n),
                     {"simple": i, "degree": m, "computed": got})
        for j in range(1, n + 1):
            e = ext_dims(simple_rep(i, n), simple_rep(j, n))
            for m in range(top + 1):
                r.record(_padded(e, m) == ext_simples_oracle(i, j, m, n),
                         {"pair": [i, j], "degree": m, "computed": _padded(e, m)})
    return r


def nodes(n):
    return [(i, k) for i in range(1, n + 1) for k in range(i, n + 1)]


def hom_oracle_suite(n):
    r = SuiteResult("hom-formulas")
    for i, k in nodes(n):
        M = omega(M_of(i, k, n), n)
        for x in range(1, n + 1):
            r.record(hom_dim(projective_rep(x, n), M) == dim_hom_oracle_proj(x, i, k),
                     {"formula": "P->M", "x": x, "node": [i, k]})
            r.record(hom_dim(standard_rep(x, n), M) == dim_hom_oracle_std(x, i, k),
                     {"formula": "Delta->M", "x": x, "node": [i, k]})
        if k < i + 2:
            continue
        for j, l in nodes(n):
            N = omega(M_of(j, l, n), n)
            r.record(hom_dim(M, N) == dim_hom_oracle_MM(i, k, j, l),
                     {"formula": "M->M", "source": [i, k], "target": [j, l]})
    return r


def ext_oracle_suite(n):
    r = SuiteResult("ext-formulas")
    top = 2 * n - 1
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            e = ext_dims(standard_rep(x, n), simple_rep(y, n))
            for m in range(top + 1):
                r.record(_padded(e, m) == ext_oracle_delta_to_simple(x, y, m),
                         {"formula": "Delta->L", "pair": [x, y], "degree": m})
    for i, k in nodes(n):
        M = omega(M_of(i, k, n), n)
        for j, l in nodes(n):
            e = ext_dims(M, omega(M_of(j, l, n), n))
            where = {"source": [i, k], "target": [j, l]}
            r.record(_padded(e, 1) == ext_oracle_eq1(i, k, j, l, n), dict(where, degree=1))
            r.record(_padded(e, 2) == ext_oracle_eq2(i, k, j, l, n), dict(where, degree=2))
            for m in range(3, top + 1):
                r.record(_padded(e, m) == ext_oracle_eq3(i, k, j, l, m, n), dict(where, degree=m))
    return r


def classification_suite(n):
    r = SuiteResult("classification")
    exceptional = 0
    for d in enumerate_indecomposables(n):
        c = classify_module(d, n)
        r.record(c.in_f_delta == in_f_delta_parity(d), {"descriptor": d, "property": "F(Delta)"})
        r.record(c.in_f_nabla == in_f_nabla_parity(d), {"descriptor": d, "property": "F(Nabla)"})
        r.record(c.self_orthogonal == self_orthogonal_closed_form(d),
                 {"descriptor": d, "property": "self-orthogonal"})
        r.record(c.exceptional == exceptional_closed_form(d, n),
                 {"descriptor": d, "property": "exceptional"})
        exceptional += c.exceptional
    r.record(exceptional == 2 * n - 1, {"exceptional_count": exceptional})
    return r


def order_isomorphism_suite(n, poset=None):
    r = SuiteResult("order-isomorphism")
    report = order_isomorphism_check(n, poset)
    r.checked = report["pairs_checked"]
    r.failure_count = len(report["violations"])
    r.failures = [{"source": list(v["source"]), "target": list(v["target"]),
                   "order": v["order"], "ext_nonzero": v["ext_nonzero"]}
                  for v in report["violations"][:MAX_REPORTED]]
    return r


def antichain_suite(n, poset=None):
    r = SuiteResult("antichains")
    P = poset if poset is not None else build_poset(n)
    r.record(not P.check(), {"poset": P.check()})
    from_antichains = set(antichain_modules(n, poset=P))
    from_construction = {t.summands for t in classify_tilting(n, verify=False)
                    if t.side in ("characteristic", "delta")}
    for T in sorted(from_antichains | from_construction):
        r.record(T in from_antichains and T in from_construction,
                 {"module": list(T), "antichain": T in from_antichains,
                  "classification": T in from_construction})
    return r


def tilting_suite(n):
    r = SuiteResult("tilting")
    mods = classify_tilting(n)
    r.record(len(mods) == n * (n - 1) + 1, {"count": len(mods)})
    for t in mods:
        r.record(t.certificate.passed, {"module": list(t.summands),
                                        "failure": t.certificate.failure})
    return r


def sequence_suite(n, exhaustive_limit=4):
    r = SuiteResult("sequences")
    seqs = enumerate_sequences(n)
    r.record(len(seqs) == 2 ** (n - 1), {"count": len(seqs)})
    for s in seqs:
        cert = verify_sequence(s)
        r.record(cert.passed and len(cert.transcript) == n - 1,
                 {"sequence": str(s), "failure": cert.failure})
    if n <= exhaustive_limit:
        report = exhaustive_cross_check(n)
        r.record(report["passed"], {"unexpected": report["unexpected"],
                                    "missing": report["missing"]})
    return r


def oracle_suites(n):
    return [kernel_table_suite(n), simple_resolution_suite(n),
            hom_oracle_suite(n), ext_oracle_suite(n)]


def verify_all(n, poset=None):
    """Every suite at one n, in a fixed order."""
    out = [catalogue_suite(n)]
    out += oracle_suites(n)
    out += [classification_suite(n), order_isomorphism_suite(n, poset),
            antichain_suite(n, poset), tilting_suite(n), sequence_suite(n)]
    return out
