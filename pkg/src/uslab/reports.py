"""Named verification suites and their deterministic reports."""
from __future__ import annotations

import json
import random
import time
from math import comb
from dataclasses import dataclass, field
from pathlib import Path

from uslab import linalg, scalars
from uslab.lab import functors, principal
from uslab.lab import vectors as vec
from uslab.lab.fuzz import module_axiom_check
from uslab.lab.gln import gln_highest_weight, scalar_gln_module, sl_weight_of, tensor_gln, wedge_gln_module
from uslab.lab.modules import OmegaOneC, TModule
from uslab.lab.weights import casimir_scalar, casimir_value, classify_weight, gamma
from uslab.lab.whittaker import extract_w_action, weight_space, whittaker_subspace
from uslab.lab.wmodule import one_dim_w_module, w_action_on_wedge
from uslab.pbw import (
    antisymmetry_defects, casimir_element, jacobi_defects, make_lie_structure,
    product_bracket_defects, random_element,
)
from uslab.quiver import (
    QuiverRep, check_local_nilpotency, check_relations, direct_sum, enumerate_simples, is_simple,
)
from uslab.walgebra import centralizer_of_e, monomial_independence, verify_w_membership, w_algebra

SUITES = (
    "lie-axioms", "w-membership", "tensor-decomposition", "pi-chain",
    "block-principal", "block-generic", "cuspidal-scan", "quiver",
)


class UnknownSuiteError(ValueError):
    pass


class ConfigError(ValueError):
    pass


@dataclass
class SuiteConfig:
    suite: str = "all"
    n: int = 2
    degree: int = 4
    window: int = 3
    seed: int = 0
    c: str | None = None
    mu: list | None = None
    format: str = "json"
    max_n: int = scalars.MAX_RANK
    timing: bool = False

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITES:
            raise UnknownSuiteError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES + ('all',))}")
        if not 2 <= self.n <= self.max_n:
            raise ConfigError(f"n must lie in [2, {self.max_n}]")
        if self.degree < 0 or self.window < 0:
            raise ConfigError("degree and window must be nonnegative")
        if self.format not in ("json", "text"):
            raise ConfigError("format must be json or text")
        try:
            self.c_value = scalars.param("c") if self.c is None else scalars.parse_scalar(self.c)
            self.mu_value = None if self.mu is None else tuple(scalars.parse_scalar(m) for m in self.mu)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if self.mu_value is not None and len(self.mu_value) != self.n:
            raise ConfigError(f"--mu needs {self.n} entries")

    def echo(self) -> dict:
        return {
            "suite": self.suite, "n": self.n, "degree": self.degree, "window": self.window,
            "seed": self.seed, "c": self.c, "mu": self.mu,
        }


@dataclass
class Report:
    suite: str
    config: dict
    checks: list = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return any(c["status"] == "fail" for c in self.checks)

    def to_json(self) -> dict:
        return {"suite": self.suite, "config": self.config,
                "checks": sorted(self.checks, key=lambda c: c["check_name"])}

    def to_text(self) -> str:
        lines = [f"suite {self.suite}  " + " ".join(f"{k}={v}" for k, v in self.config.items())]
        for c in sorted(self.checks, key=lambda c: c["check_name"]):
            line = f"{c['status']:7s} {c['check_name']}  [{c['anchor']}]"
            if c["elapsed"] is not None:
                line += f"  {c['elapsed']:.3f}s"
            lines.append(line)
            if c["status"] != "pass" and c["witness"] is not None:
                lines.append(f"        witness: {json.dumps(c['witness'], sort_keys=True)}")
        passed = sum(c["status"] == "pass" for c in self.checks)
        lines.append(f"{passed}/{len(self.checks)} passed")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str = "json") -> str:
        if fmt == "text":
            return self.to_text()
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


def save_report(report: Report, path, fmt: str = "json") -> None:
    Path(path).write_text(report.render(fmt))


class _Runner:
    def __init__(self, cfg: SuiteConfig, report: Report):
        self.cfg = cfg
        self.report = report

    def check(self, name: str, anchor: str, fn):
        """Run ``fn`` -> (ok, witness); exceptions become failures."""
        start = time.perf_counter()
        try:
            ok, witness = fn()
            status = "pass" if ok else "fail"
        except functors.PreconditionViolation as exc:
            status, witness = "skipped", {"precondition-violation": exc.condition, "detail": exc.detail}
        except Exception as exc:  # a crashing check is a failing check
            status, witness = "fail", {"error": type(exc).__name__, "message": str(exc)}
        if status == "fail" and witness is None:
            witness = "no witness available"
        elapsed = round(time.perf_counter() - start, 6) if self.cfg.timing else None
        self.report.checks.append({"check_name": name, "anchor": anchor, "status": status,
                                   "witness": witness, "elapsed": elapsed})


def _defects(items):
    items = list(items)
    return (not items, items[:5] if items else None)


# -- suites --------------------------------------------------------------------

def _lie_axioms(r: _Runner, n: int):
    lie = make_lie_structure(n)
    r.check(f"n={n} antisymmetry", "bracket antisymmetry on generators", lambda: _defects(antisymmetry_defects(lie)))
    r.check(f"n={n} jacobi", "Jacobi identity on generator triples", lambda: _defects(jacobi_defects(lie)))
    r.check(f"n={n} product commutator", "xy - yx equals the bracket",
            lambda: _defects(product_bracket_defects(lie)))

    def central():
        C = casimir_element(n)
        return _defects(str(g) for g in lie.generators if not (C * lie.gen(g) - lie.gen(g) * C).is_zero())
    r.check(f"n={n} casimir central", "quadratic Casimir commutes with sl_{n+1}", central)


def _w_membership(r: _Runner, n: int):
    def membership():
        rows = verify_w_membership(n)
        return _defects(x["check_name"] for x in rows if x["status"] != "pass")
    r.check(f"n={n} W generators commute with h and e_0k", "x_ij, omega_k centralise h_n and m_n", membership)

    def centralizer():
        basis = centralizer_of_e(n)
        return len(basis) == n * (n - 1) + n, {"dimension": len(basis)}
    r.check(f"n={n} centralizer of e", "ker ad e spanned by e_ij - h_i and e_k0", centralizer)


def _tensor_decomposition(r: _Runner, n: int, seed: int):
    w = w_algebra(n)
    lie = w.lie

    def generators():
        bad = [str(g) for g in lie.generators if w.decompose(lie.gen(g)).expand() != lie.gen(g)]
        return _defects(bad)
    r.check(f"n={n} round trip on generators", "U_S = W (x) B on generators", generators)

    def randoms():
        rng = random.Random(seed)
        bad = []
        for _ in range(50):
            u = random_element(lie, rng, max_degree=2, terms=3)
            if w.decompose(u).expand() != u:
                bad.append(str(u))
        return _defects(bad)
    r.check(f"n={n} round trip on 50 random elements", "U_S = W (x) B on random elements", randoms)

    def independence():
        ok, rank, count = monomial_independence(n, 2)
        return ok and rank == count, {"rank": rank, "count": count}
    r.check(f"n={n} ordered W-monomials independent", "PBW basis of W up to degree 2", independence)


def _pi_chain(r: _Runner, n: int, degree: int):
    r.check(f"n={n} pi_(k+1) pi_k = 0", "the maps pi_k form a complex",
            lambda: _defects(str(x) for x in principal.chain_defects(n, degree)))
    r.check(f"n={n} pi_k equivariant", "pi_k are module maps",
            lambda: _defects(str(x) for x in principal.equivariance_defects(n, degree)))

    def ladder():
        dims = [len(principal.image_whittaker(n, k, degree)[0]) for k in range(n)]
        return dims == [comb(n - 1, k) for k in range(n)], {"dims": dims}
    r.check(f"n={n} wh_1(im pi_k) dimensions", "dim wh_1(im pi_k) = C(n-1,k)", ladder)

    def count():
        block = principal.principal_block(n, degree)
        simple = all(principal.is_simple(b) for b in block)
        distinct = all(principal.hom_dimension(a, b) == int(i == j)
                       for i, a in enumerate(block) for j, b in enumerate(block))
        return simple and distinct and len(block) == n, {"count": len(block), "simple": simple, "distinct": distinct}
    r.check(f"n={n} principal block has n simples", "n pairwise distinct simple wh-spaces", count)


def _block_principal(r: _Runner, n: int, degree: int, seed: int):
    def formulas():
        bad = []
        for k in range(n + 1):
            M = TModule(wedge_gln_module(n, k))
            B = whittaker_subspace(M, M.truncation(1), [1] * n)
            if not extract_w_action(M, B).same_as(w_action_on_wedge(M.V)):
                bad.append(k)
        return _defects(bad)
    r.check(f"n={n} W-action on wedge modules", "x_ij -> E_ij - E_ii, omega_k -> sum E_kj E_jj - E_kj", formulas)

    def closed_form():
        block = principal.principal_block(n, degree)
        bad = [k for k, b in enumerate(block) if principal.hom_dimension(b, principal.principal_simple(n, k)) != 1]
        return _defects(bad)
    r.check(f"n={n} simples match closed form", "wh_1(im pi_k) as restricted wedge action", closed_form)

    def omega_zero():
        bad = [k for k in range(n)
               if not all(linalg.is_zero_matrix(m) for g, m in principal.principal_simple(n, k).mats.items()
                          if g.tag == "OMEGA")]
        return _defects(bad)
    r.check(f"n={n} omega acts by zero on principal simples", "omega_k vanish on wh_1(im pi_k)", omega_zero)

    r.check(f"n={n} a_(n-1) wedge structure", "E_lq - E_ln act as gl_(n-1) on wedges",
            lambda: _defects((k, d) for k in range(n) for d in principal.a_structure_defects(n, k)))

    def round_trips():
        bad = []
        for k in range(n):
            V = principal.principal_simple(n, k)
            G = functors.GModule(V)
            if not extract_w_action(G, whittaker_subspace(G, G.truncation(2), [1] * n)).same_as(V):
                bad.append(("F G", k))
            G1 = functors.G1Module(V, scalars.mu(n))
            S = weight_space(G1, G1.slice_basis((0,) * n), scalars.mu(n))
            if not extract_w_action(G1, S).same_as(V):
                bad.append(("F1 G1", k))
        return _defects(bad)
    r.check(f"n={n} functor round trips on principal simples", "F G = id and F1 G1 = id", round_trips)

    def casimir():
        lam = scalars.param("lam1")
        bad = []
        for V in (wedge_gln_module(n, 1), wedge_gln_module(n, 2)):
            wt = sl_weight_of(gln_highest_weight(V))
            v = vec.basis_vector((0,) * n, V.highest)
            a = casimir_scalar(TModule(V, "poly"), v)
            b = casimir_scalar(TModule(V, "omega"), v)
            if not (a == b == casimir_value(wt)):
                bad.append(str(wt))
        Vs = tensor_gln(wedge_gln_module(n, 1), scalar_gln_module(n, lam))
        v = vec.basis_vector((0,) * n, Vs.highest)
        if casimir_scalar(TModule(Vs, "poly"), v) != casimir_scalar(TModule(Vs, "omega"), v):
            bad.append("symbolic")
        return _defects(bad)
    r.check(f"n={n} casimir agreement", "same central character for T(A_n,V) and T(Omega,V)", casimir)

    def fuzz():
        res = module_axiom_check(TModule(wedge_gln_module(n, 1)), seed=seed, trials=20, raise_on_failure=False)
        return res["status"] == "pass", res["witness"]
    r.check(f"n={n} module law on T(Omega, wedge^1)", "representation law", fuzz)


def _block_generic(r: _Runner, n: int, c, seed: int):
    label = scalars.format_scalar(c)

    def extraction():
        M = OmegaOneC(n, c)
        B = whittaker_subspace(M, M.truncation(1), [1] * n)
        return extract_w_action(M, B).same_as(one_dim_w_module(c, n)), None
    r.check(f"n={n} c={label} one-dimensional W-module", "x_ij -> c/(n+1), omega_k -> c^2/(n+1)^2 + c/(n+1)",
            extraction)

    def casimir():
        got = casimir_scalar(OmegaOneC(n, c), vec.basis_vector((0,) * n, 0))
        want = casimir_value(gamma(c, n))
        return got == want, {"got": scalars.format_scalar(got), "expected": scalars.format_scalar(want)}
    r.check(f"n={n} c={label} casimir of Omega(1,c)", "central character of gamma(c eps_0)", casimir)

    def identification():
        M, T = OmegaOneC(n, c), TModule(scalar_gln_module(n, -c / (n + 1)))
        rng = random.Random(seed)
        bad = []
        for g in M.lie.generators:
            v = M.random_vector(rng)
            if vec.vsub(M.act(g, v), T.act(g, v)):
                bad.append(str(g))
        return _defects(bad)
    r.check(f"n={n} c={label} Omega(1,c) = T(Omega, V_(-c/(n+1)))", "identification by the identity map",
            identification)

    def round_trips():
        V = one_dim_w_module(c, n)
        G = functors.GModule(V)
        ok1 = extract_w_action(G, whittaker_subspace(G, G.truncation(2), [1] * n)).same_as(V)
        G1 = functors.G1Module(V, scalars.mu(n))
        ok2 = extract_w_action(G1, weight_space(G1, G1.slice_basis((0,) * n), scalars.mu(n))).same_as(V)
        return ok1 and ok2, {"F G": ok1, "F1 G1": ok2}
    r.check(f"n={n} c={label} functor round trips", "F G = id and F1 G1 = id", round_trips)

    def taxonomy():
        bad = []
        for cc in range(-n - 2, 3):
            got = classify_weight(gamma(cc, n))
            want_singular_integral = -n <= cc <= -1
            if (got == ("singular", "integral")) != want_singular_integral:
                bad.append(cc)
        return _defects(bad)
    r.check(f"n={n} gamma(c eps_0) singular integral exactly for c in -1..-n", "weight taxonomy", taxonomy)


def _cuspidal_scan(r: _Runner, n: int, window: int, seed: int, mu, c):
    rng = random.Random(seed)
    cval = c if scalars.is_constant(c) else scalars.parse_scalar("1/2")

    def scan(V, mu_v, cond, cc=None):
        rows = functors.injectivity_scan(V, mu_v, window, cond, cc)
        bad = [x for x in rows if x["status"] != "pass"]
        return not bad, (bad[:5] if bad else None)

    mu1 = mu if mu is not None else functors.sample_generic_mu(rng, n)
    tag = "(" + ",".join(scalars.format_scalar(x) for x in mu1) + ")"
    for k in range(n):
        r.check(f"n={n} mu={tag} injectivity on G1(L_{k})", "root vectors act injectively (no-int1)",
                lambda k=k: scan(principal.principal_simple(n, k), mu1, "no-int1"))
    mu2 = mu if mu is not None else functors.sample_generic_mu(rng, n, c=cval)
    tag2 = "(" + ",".join(scalars.format_scalar(x) for x in mu2) + ")"
    r.check(f"n={n} mu={tag2} c={scalars.format_scalar(cval)} injectivity on G1(V'_c)",
            "root vectors act injectively (no-int2)",
            lambda: scan(one_dim_w_module(cval, n), mu2, "no-int2", cval))


def _quiver(r: _Runner, n: int):
    z = QuiverRep.zero(2, (1, 1))
    r.check("fixture zero maps pass relations", "xy = yx = 0", lambda: (check_relations(z)["status"] == "pass", None))
    r.check("fixture simple at vertex 1 passes relations", "xy = yx = 0",
            lambda: (check_relations(QuiverRep.zero(2, (1, 0)))["status"] == "pass", None))

    def both_ways():
        rep = z.with_matrix(1, 2, [[1]]).with_matrix(2, 1, [[1]])
        res = check_relations(rep)
        return res["status"] == "fail", res["violations"]
    r.check("fixture x and y both nonzero fails relations", "xy != 0 detected", both_ways)
    r.check("fixture zero maps nilpotent", "locally nilpotent", lambda: (check_local_nilpotency(z), None))
    r.check("fixture unipotent loop not nilpotent", "loop with eigenvalue 1",
            lambda: (not check_local_nilpotency(QuiverRep.zero(2, (1, 0)).with_matrix(1, 1, [[1]])), None))
    r.check("fixture single forward arrow nilpotent", "strictly triangular operator",
            lambda: (check_local_nilpotency(z.with_matrix(1, 2, [[1]])), None))

    def simples():
        reps = enumerate_simples(n)
        ok = len(reps) == n and all(check_relations(x)["status"] == "pass" and check_local_nilpotency(x)
                                    and is_simple(x) for x in reps)
        ds = direct_sum(reps[0], reps[-1])
        ok = ok and check_relations(ds)["status"] == "pass" and check_local_nilpotency(ds)
        return ok, {"count": len(reps)}
    r.check(f"n={n} enumerate_simples gives n simples", "n simple objects", simples)


def run_suite(cfg: SuiteConfig) -> Report:
    report = Report(cfg.suite, cfg.echo())
    r = _Runner(cfg, report)
    names = SUITES if cfg.suite == "all" else (cfg.suite,)
    for name in names:
        if name == "lie-axioms":
            _lie_axioms(r, cfg.n)
        elif name == "w-membership":
            _w_membership(r, cfg.n)
        elif name == "tensor-decomposition":
            _tensor_decomposition(r, cfg.n, cfg.seed)
        elif name == "pi-chain":
            _pi_chain(r, cfg.n, cfg.degree)
        elif name == "block-principal":
            _block_principal(r, cfg.n, cfg.degree, cfg.seed)
        elif name == "block-generic":
            _block_generic(r, cfg.n, cfg.c_value, cfg.seed)
        elif name == "cuspidal-scan":
            _cuspidal_scan(r, cfg.n, cfg.window, cfg.seed, cfg.mu_value, cfg.c_value)
        elif name == "quiver":
            _quiver(r, cfg.n)
    return report


__all__ = ["SUITES", "SuiteConfig", "Report", "run_suite", "save_report", "UnknownSuiteError", "ConfigError"]
