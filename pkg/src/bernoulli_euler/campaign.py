"""Seeded verification campaigns over the identity checks.

Each identity is registered with the names of its instance fields and the
constraints an instance must satisfy.  A campaign runs a fixed set of edge
cases followed by random instances drawn from a ``random.Random`` seeded by
``"{seed}:{identity_id}"``, so any single identity can be replayed on its own.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from . import identities as ids
from .identities import CheckReport
from .series import Kind, Params

__all__ = [
    "ConfigError",
    "CampaignConfig",
    "CampaignResult",
    "IDENTITIES",
    "identity_ids",
    "run_instance",
    "sample_instance",
    "edge_instances",
    "run_identity",
    "run_campaign",
    "minimal_counterexample",
    "resolve_upsilon",
]

BOUND = 20


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class IdentitySpec:
    run: Callable[..., CheckReport]
    keys: tuple[str, ...]
    # constraint tags, see _admissible
    needs: frozenset = frozenset()
    n_min: int = 0
    m_choices: tuple[int, ...] = ()


def _p(inst: dict) -> Params:
    return Params(inst["lam"], inst["mu"])


def _spec(run, keys, needs=(), n_min=0, m_choices=()) -> IdentitySpec:
    return IdentitySpec(run, tuple(keys), frozenset(needs), n_min, tuple(m_choices))


IDENTITIES: dict[str, IdentitySpec] = {
    "monomial_determinantal": _spec(
        lambda i: ids.check_monomial_determinantal(i["n"], i["lam"], i["x"]),
        ("n", "lam", "x"), needs=("euler_lam",),
    ),
    "monomial_classical": _spec(
        lambda i: ids.check_monomial_classical(i["n"], i["x"]), ("n", "x"),
    ),
    "addition": _spec(
        lambda i: ids.check_addition(i["n"], _p(i), i["x"], i["y"]),
        ("n", "lam", "mu", "x", "y"),
    ),
    "addition:poly": _spec(
        lambda i: ids.check_addition(i["n"], _p(i), 0, i["y"], polynomial=True),
        ("n", "lam", "mu", "y"),
    ),
    "numbers_from_polys": _spec(
        lambda i: ids.check_numbers_from_polys(i["n"], _p(i), i["x"]),
        ("n", "lam", "mu", "x"),
    ),
    "connection_prop": _spec(
        lambda i: ids.check_connection_prop(i["n"], _p(i), i["x"], i["det_lam"]),
        ("n", "lam", "mu", "x", "det_lam"),
    ),
    "raabe": _spec(
        lambda i: ids.check_raabe(i["n"], i["m"], i["mu"], i["x"]),
        ("n", "m", "mu", "x"), m_choices=(1, 3, 5, 7),
    ),
    "raabe_classical:Bernoulli": _spec(
        lambda i: ids.check_raabe_classical(i["n"], i["m"], i["x"], "Bernoulli"),
        ("n", "m", "x"), m_choices=(1, 2, 3, 4, 5, 6),
    ),
    "raabe_classical:Euler": _spec(
        lambda i: ids.check_raabe_classical(i["n"], i["m"], i["x"], "Euler"),
        ("n", "m", "x"), m_choices=(1, 3, 5, 7),
    ),
    "explicit_euler_form": _spec(
        lambda i: ids.check_explicit_euler_form(i["n"], _p(i), i["x"]),
        ("n", "lam", "mu", "x"), needs=("regular",),
    ),
    "convex_combination": _spec(
        lambda i: ids.check_convex_combination(i["n"], _p(i), i["x"]),
        ("n", "lam", "mu", "x"), needs=("regular",),
    ),
    "derivative": _spec(
        lambda i: ids.check_derivative(i["n"], i["l"], _p(i)),
        ("n", "l", "lam", "mu"),
    ),
    "integral": _spec(
        lambda i: ids.check_integral(i["n"], _p(i), i["x"], i["y"]),
        ("n", "lam", "mu", "x", "y"),
    ),
    "integral_shifted": _spec(
        lambda i: ids.check_integral_shifted(i["n"], _p(i), i["x"], i["y"]),
        ("n", "lam", "mu", "x", "y"),
    ),
    "integral_shifted:corrected": _spec(
        lambda i: ids.check_integral_shifted(i["n"], _p(i), i["x"], i["y"], form="corrected"),
        ("n", "lam", "mu", "x", "y"),
    ),
    "recurrence_th3": _spec(
        lambda i: ids.check_recurrence_th3(i["n"], _p(i), i["x"]),
        ("n", "lam", "mu", "x"), needs=("regular", "mu_not_2"),
    ),
    "umbral_translation": _spec(
        lambda i: ids.check_umbral_translation(i["n"], _p(i), i["x"]),
        ("n", "lam", "mu", "x"),
    ),
    "umbral_translation:poly": _spec(
        lambda i: ids.check_umbral_translation(i["n"], _p(i), 0, polynomial=True),
        ("n", "lam", "mu"),
    ),
    "umbral_cross": _spec(
        lambda i: ids.check_umbral_cross(i["n"], i["m"], _p(i), i["x"], i["y"]),
        ("n", "m", "lam", "mu", "x", "y"), needs=("n_plus_m",),
    ),
}

for _variant in ids.UPSILON_VARIANTS:
    for _form in ("printed", "corrected"):
        _id = f"upsilon:{_variant}" + (":corrected" if _form == "corrected" else "")
        IDENTITIES[_id] = _spec(
            lambda i, v=_variant, f=_form: ids.check_upsilon_identity(
                i["n"], _p(i), i["x"], v, rhs_form=f
            ),
            ("n", "lam", "mu", "x"), needs=("regular",), n_min=1,
        )


def identity_ids() -> list[str]:
    return sorted(IDENTITIES)


# -- instance validity ---------------------------------------------------------


def _admissible(spec: IdentitySpec, inst: dict, max_n: int) -> bool:
    n = inst["n"]
    if n < spec.n_min or n > max_n:
        return False
    if "m" in inst and spec.m_choices and inst["m"] not in spec.m_choices:
        return False
    if "n_plus_m" in spec.needs and n + inst["m"] > max_n:
        return False
    if "lam" in inst:
        lam, mu = inst["lam"], inst.get("mu")
        if lam == 0:
            return False
        if mu is not None:
            if mu == 1:
                return False
            if Params(lam, mu).kind is Kind.ILL_DEFINED:
                return False
            if "regular" in spec.needs and lam == mu - 1:
                return False
        if "euler_lam" in spec.needs and lam == -1:
            return False
    elif "mu" in inst and inst["mu"] == 1:
        return False
    if "mu_not_2" in spec.needs and inst["mu"] == 2:
        return False
    if "det_lam" in inst and inst["det_lam"] in (0, -1):
        return False
    return True


def run_instance(identity_id: str, inst: dict) -> CheckReport:
    return IDENTITIES[identity_id].run(inst)


# -- sampling ------------------------------------------------------------------


def _rat(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-BOUND, BOUND), rng.randint(1, BOUND))
        if v or not nonzero:
            return v


def sample_instance(identity_id: str, rng: random.Random, max_n: int) -> dict:
    """Draw one admissible instance (rejection sampling)."""
    spec = IDENTITIES[identity_id]
    while True:
        inst: dict = {}
        for key in spec.keys:
            if key == "n":
                inst["n"] = rng.randint(spec.n_min, max_n)
            elif key == "m":
                if spec.m_choices:
                    inst["m"] = rng.choice(spec.m_choices)
                else:
                    inst["m"] = rng.randint(0, max_n - inst["n"])
            elif key == "l":
                inst["l"] = rng.randint(0, inst["n"] + 2)
            elif key == "lam":
                # lambda = 1 is the classical line; give it real weight
                inst["lam"] = Fraction(1) if rng.random() < 0.2 else _rat(rng, nonzero=True)
            elif key == "mu":
                inst["mu"] = _rat(rng)
            else:
                inst[key] = _rat(rng, nonzero=key == "det_lam")
        if _admissible(spec, inst, max_n):
            return inst


_EDGE_BASE = {
    "n": 3, "m": 3, "l": 1,
    "lam": Fraction(3), "mu": Fraction(1, 3),
    "x": Fraction(2, 5), "y": Fraction(-3, 4), "det_lam": Fraction(2),
}
_EDGE_OVERRIDES: tuple[dict, ...] = (
    {},
    {"n": 0},
    {"n": 1},
    {"x": 0},
    {"y": 0},
    {"m": 1},
    {"m": 0},
    {"l": 0},
    {"l": 5},
    {"mu": 0},
    {"mu": 0, "lam": 1},
    {"mu": 2},
    {"mu": 2, "lam": 1},
    {"lam": 1},
    {"lam": -1},
)


def edge_instances(identity_id: str, max_n: int) -> list[dict]:
    """Deterministic degenerate instances, de-duplicated, in fixed order."""
    spec = IDENTITIES[identity_id]
    out: list[dict] = []
    for over in _EDGE_OVERRIDES:
        if not set(over) <= set(spec.keys):
            continue
        inst = {k: _EDGE_BASE[k] for k in spec.keys}
        inst["n"] = min(inst["n"], max_n)
        inst.update(over)
        if "m" in spec.keys and not spec.m_choices:
            inst["m"] = min(inst["m"], max_n - inst["n"])
        if _admissible(spec, inst, max_n) and inst not in out:
            out.append(inst)
    return out


# -- running -------------------------------------------------------------------


def run_identity(
    identity_id: str,
    seed: int,
    instances: int,
    max_n: int,
    include_edges: bool = True,
) -> list[CheckReport]:
    if identity_id not in IDENTITIES:
        raise ConfigError(f"unknown identity {identity_id!r}")
    insts = edge_instances(identity_id, max_n) if include_edges else []
    rng = random.Random(f"{seed}:{identity_id}")
    insts += [sample_instance(identity_id, rng, max_n) for _ in range(instances)]
    return [
        run_instance(identity_id, inst).with_meta(seed=seed, index=i)
        for i, inst in enumerate(insts)
    ]


def _rat_grid() -> list[Fraction]:
    vals = {Fraction(p, q) for q in range(1, 4) for p in range(-3, 4)}
    return sorted(vals, key=lambda v: (max(abs(v.numerator), v.denominator), v < 0, abs(v)))


def _compositions(total: int, sizes: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not sizes:
        if total == 0:
            yield ()
        return
    for first in range(min(total, sizes[0] - 1) + 1):
        for rest in _compositions(total - first, sizes[1:]):
            yield (first,) + rest


def minimal_counterexample(
    identity_id: str, max_n: int = 16, n_cap: int = 6, max_size: int = 16
) -> CheckReport | None:
    """First failing instance in a fixed size order, or None if none is found.

    The size of an instance is n plus, for every other field, its index in
    a short list of candidate values (rationals ordered by height).  Sizes
    are scanned upwards; ties break on n, then lexicographically.
    """
    spec = IDENTITIES[identity_id]
    grid = _rat_grid()
    others = [k for k in spec.keys if k != "n"]

    def values_for(n: int) -> list[list]:
        vals: list[list] = []
        for k in others:
            if k == "m":
                vals.append(list(spec.m_choices) or list(range(max_n - n + 1)))
            elif k == "l":
                vals.append(list(range(n + 3)))
            else:
                vals.append(grid)
        return vals

    top_n = min(max_n, n_cap)
    for size in range(spec.n_min, max_size + 1):
        for n in range(spec.n_min, min(top_n, size) + 1):
            values = values_for(n)
            for idx in _compositions(size - n, [len(v) for v in values]):
                inst = {"n": n}
                inst.update({k: values[j][i] for j, (k, i) in enumerate(zip(others, idx))})
                if not _admissible(spec, inst, max_n):
                    continue
                rep = run_instance(identity_id, inst)
                if not rep.equal:
                    return rep
    return None


def resolve_upsilon(passing: dict[str, bool], rhs_form: str = "printed") -> str | None:
    """Name of the single Upsilon variant that passed everywhere, else None."""
    suffix = ":corrected" if rhs_form == "corrected" else ""
    ok = [v for v in ids.UPSILON_VARIANTS if passing.get(f"upsilon:{v}{suffix}")]
    return ok[0] if len(ok) == 1 else None


@dataclass(frozen=True)
class CampaignConfig:
    seed: int = 42
    instances_per_identity: int = 100
    max_n: int = 16
    order: int = 64
    identities: tuple[str, ...] = ("all",)
    output: str = "text"

    def validate(self) -> "CampaignConfig":
        if not 0 <= self.seed < 2**64:
            raise ConfigError("seed must be a 64-bit unsigned integer")
        if self.instances_per_identity < 1:
            raise ConfigError("instances per identity must be positive")
        if self.max_n < 1:
            raise ConfigError("max_n must be positive")
        if self.max_n + 2 > self.order:
            raise ConfigError(
                f"max_n + 2 must not exceed the truncation order "
                f"(max_n={self.max_n}, order={self.order})"
            )
        if self.output not in ("json", "csv", "latex", "text"):
            raise ConfigError(f"unknown output format {self.output!r}")
        for i in self.identities:
            if i != "all" and i not in IDENTITIES:
                raise ConfigError(f"unknown identity {i!r}")
        return self

    def selected(self) -> list[str]:
        if "all" in self.identities:
            return identity_ids()
        return sorted(set(self.identities))


@dataclass
class CampaignResult:
    config: CampaignConfig
    reports: list[CheckReport]
    summary: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return 0 if all(r.documented for r in self.reports) else 1


def run_campaign(config: CampaignConfig) -> CampaignResult:
    config.validate()
    reports: list[CheckReport] = []
    per_id: dict[str, dict] = {}
    for identity_id in config.selected():
        reps = run_identity(
            identity_id, config.seed, config.instances_per_identity, config.max_n
        )
        reports.extend(reps)
        failed = [r for r in reps if not r.equal]
        entry = {"instances": len(reps), "passed": len(reps) - len(failed)}
        if failed:
            entry["erratum"] = ids.ERRATA.get(identity_id)
            cex = minimal_counterexample(identity_id, config.max_n)
            entry["minimal_counterexample"] = (cex or failed[0]).to_dict()
        per_id[identity_id] = entry
    reports.sort(key=lambda r: (r.identity_id, r.index))
    passing = {k: v["passed"] == v["instances"] for k, v in per_id.items()}
    summary: dict = {"seed": config.seed, "identities": per_id}
    for form in ("printed", "corrected"):
        suffix = ":corrected" if form == "corrected" else ""
        if all(f"upsilon:{v}{suffix}" in per_id for v in ids.UPSILON_VARIANTS):
            summary[f"upsilon_validating_variant:{form}"] = resolve_upsilon(passing, form)
    return CampaignResult(config, reports, summary)
