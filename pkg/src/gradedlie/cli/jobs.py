"""Job files: line-oriented ``key = value`` text.

    type = A2
    kac = 1,1,1
    analyses = all            # or a comma list
    seed = 0
    cap = 200000
    format = text
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..grading import GradingError, KacSpec
from ..liealg.rootsystem import parse_type
from ..weyl.groups import DEFAULT_CAP

ANALYSES = ("grade", "cartan", "weights", "weyl", "strata", "families", "central", "h1",
            "real-orbits")

DEPENDS = {
    "grade": (),
    "cartan": ("grade",),
    "weights": ("cartan",),
    "weyl": ("cartan", "weights"),
    "strata": ("weyl",),
    "families": ("strata",),
    "central": ("strata",),
    "h1": ("weyl",),
    "real-orbits": ("h1", "strata"),
}

FORMATS = ("text", "machine")


class JobParseError(ValueError):
    def __init__(self, msg, line=0, col=0, source="<job>"):
        self.line, self.col, self.source = line, col, source
        super().__init__(f"{source}:{line}:{col}: {msg}")


def with_dependencies(analyses):
    need = set()

    def add(a):
        if a not in need:
            need.add(a)
            for d in DEPENDS[a]:
                add(d)

    for a in analyses:
        add(a)
    return tuple(a for a in ANALYSES if a in need)


@dataclass(frozen=True)
class JobSpec:
    cartan_type: str
    kac: tuple
    analyses: tuple = ANALYSES
    seed: int = 0
    cap: int = DEFAULT_CAP
    format: str = "text"
    m: int | None = None
    requested: tuple = field(default=(), compare=False)

    def __post_init__(self):
        unknown = [a for a in self.analyses if a not in ANALYSES]
        if unknown:
            raise ValueError(f"unknown analysis {unknown[0]!r}")
        if not self.requested:
            object.__setattr__(self, "requested", tuple(self.analyses))
        object.__setattr__(self, "analyses", with_dependencies(self.analyses))
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")
        ks = KacSpec(self.cartan_type, self.kac)
        if self.m is not None and self.m != ks.m:
            raise ValueError(f"m = {self.m} does not match the Kac coordinates (m = {ks.m})")

    @property
    def kac_spec(self) -> KacSpec:
        return KacSpec(self.cartan_type, self.kac)

    def as_dict(self):
        return {"type": self.cartan_type, "kac": list(self.kac), "m": self.kac_spec.m,
                "analyses": list(self.analyses), "requested": list(self.requested),
                "seed": self.seed, "cap": self.cap}

    def with_(self, **kw):
        return replace(self, **kw)


def parse_kac(text: str) -> tuple:
    t = text.strip().strip("()[]")
    parts = [p for p in t.replace(",", " ").split() if p]
    if not parts:
        raise ValueError("empty Kac coordinates")
    return tuple(int(p) for p in parts)


def parse_analyses(text: str) -> tuple:
    t = text.strip()
    if t == "all":
        return ANALYSES
    items = tuple(a.strip() for a in t.split(",") if a.strip())
    for a in items:
        if a not in ANALYSES:
            raise ValueError(f"unknown analysis {a!r}")
    return items


_KEYS = {"type", "kac", "m", "analyses", "seed", "cap", "caps", "format"}


def parse_job(text: str, source: str = "<job>") -> JobSpec:
    values = {}
    where = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if "=" not in line:
            col = len(line) - len(line.lstrip()) + 1
            raise JobParseError("expected 'key = value'", lineno, col, source)
        key, _, val = line.partition("=")
        k = key.strip()
        kcol = len(key) - len(key.lstrip()) + 1
        vcol = len(key) + 2 + (len(val) - len(val.lstrip()))
        if k not in _KEYS:
            raise JobParseError(f"unknown key {k!r}", lineno, kcol, source)
        if k in values:
            raise JobParseError(f"duplicate key {k!r}", lineno, kcol, source)
        values[k] = val.strip()
        where[k] = (lineno, vcol)

    def fail(k, msg):
        line, col = where.get(k, (0, 0))
        raise JobParseError(msg, line, col, source)

    for k in ("type", "kac"):
        if k not in values:
            raise JobParseError(f"missing key {k!r}", len(text.splitlines()) + 1, 1, source)
    kw = {}
    try:
        comps = parse_type(values["type"])
    except (ValueError, KeyError) as exc:
        fail("type", f"invalid Cartan type: {exc}")
    if len(comps) != 1:
        fail("type", "Kac coordinates need a simple Cartan type")
    kw["cartan_type"] = values["type"]
    try:
        kw["kac"] = parse_kac(values["kac"])
    except ValueError as exc:
        fail("kac", f"invalid Kac coordinates: {exc}")
    conv = {"m": int, "seed": int, "cap": int, "caps": int, "analyses": parse_analyses,
            "format": str}
    for k in ("m", "seed", "cap", "caps", "analyses", "format"):
        if k in values:
            try:
                kw["cap" if k == "caps" else k] = conv[k](values[k])
            except ValueError as exc:
                fail(k, f"invalid value for {k}: {exc}")
    try:
        return JobSpec(**kw)
    except (ValueError, GradingError) as exc:
        k = "kac" if "Kac" in str(exc) or "m =" in str(exc) else (
            "format" if "format" in str(exc) else "analyses")
        fail(k if k in where else "kac", str(exc))
