"""JSON structure files.

Scalars are written as strings (``"3"``, ``"-1/2"``), never floats; entries
are sorted by index and zero coefficients dropped, so equal objects
serialize to identical bytes.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .coalg import Coalgebra, CoderPair
from .comodule import Bicomodule, BicomodulePair
from .deform import Deformation, Gauge
from .duality import DerPair
from .errors import ParseError, ShapeMismatchError
from .exactlin import SparseMat

KINDS = ("coder_pair", "bicomodule_pair", "deformation", "gauge", "der_pair")


def fmt(x) -> str:
    return str(Fraction(x))


# matrices <-> entry lists ---------------------------------------------------

def _coproduct_entries(delta: SparseMat, d: int) -> list:
    # [i, j, k, c]: coefficient of e_j (x) e_k in Delta(e_i)
    return sorted([i, *divmod(r, d), fmt(v)] for r, i, v in delta.entries())


def _endo_entries(m: SparseMat) -> list:
    # [i, j, c]: coefficient of e_j in f(e_i)
    return sorted([i, j, fmt(v)] for j, i, v in m.entries())


def cochain_entries(m: SparseMat, d: int, n: int) -> list:
    """``[i, w_1, .., w_n, c]``: coefficient of the word ``w`` in ``f(e_i)``."""
    out = []
    for r, i, v in m.entries():
        word = []
        for _ in range(n):
            r, a = divmod(r, d)
            word.append(a)
        out.append([i, *reversed(word), fmt(v)])
    return sorted(out)


def _mult_entries(mult: SparseMat, d: int) -> list:
    # [j, k, i, c]: coefficient of e_i in e_j e_k
    return sorted([*divmod(col, d), i, fmt(v)] for i, col, v in mult.entries())


class _Reader:
    def __init__(self, path: str):
        self.path = path

    def at(self, key) -> "_Reader":
        return _Reader(f"{self.path}[{key}]" if isinstance(key, int) else f"{self.path}.{key}")

    def fail(self, msg):
        raise ParseError(msg, self.path)

    def field(self, obj: dict, key: str, kind=None):
        if not isinstance(obj, dict):
            self.fail("expected an object")
        if key not in obj:
            self.fail(f"missing field '{key}'")
        val = obj[key]
        if kind is int and (not isinstance(val, int) or isinstance(val, bool)):
            self.at(key).fail("expected an integer")
        if kind is list and not isinstance(val, list):
            self.at(key).fail("expected a list")
        if kind is dict and not isinstance(val, dict):
            self.at(key).fail("expected an object")
        return val

    def scalar(self, raw):
        if isinstance(raw, bool) or isinstance(raw, float):
            self.fail("scalars must be strings like \"p/q\" (or integers)")
        if isinstance(raw, int):
            return raw
        if not isinstance(raw, str):
            self.fail("expected a scalar string")
        try:
            f = Fraction(raw.strip())
        except (ValueError, ZeroDivisionError):
            self.fail(f"not a rational number: {raw!r}")
        return f.numerator if f.denominator == 1 else f

    def entries(self, raw, bounds: tuple, rows, cols) -> SparseMat:
        """``bounds`` gives the exclusive upper bound of each index position."""
        if not isinstance(raw, list):
            self.fail("expected a list of entries")
        seen = {}
        out = []
        for n, ent in enumerate(raw):
            r = self.at(n)
            if not isinstance(ent, list) or len(ent) != len(bounds) + 1:
                r.fail(f"expected [{', '.join('index' for _ in bounds)}, coefficient]")
            idx = ent[:-1]
            for pos, (v, b) in enumerate(zip(idx, bounds)):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < b:
                    r.at(pos).fail(f"index must be an integer in [0, {b})")
            key = tuple(idx)
            if key in seen:
                r.fail(f"duplicate entry for index {list(key)} (first at position {seen[key]})")
            seen[key] = n
            c = r.at(len(bounds)).scalar(ent[-1])
            out.append((rows(*idx), cols(*idx), c))
        return SparseMat.from_entries(rows.size, cols.size, out)


class _Index:
    def __init__(self, size, fn):
        self.size, self.fn = size, fn

    def __call__(self, *idx):
        return self.fn(*idx)


def _read_coproduct(rd: _Reader, raw, d: int) -> SparseMat:
    return rd.entries(raw, (d, d, d), _Index(d * d, lambda i, j, k: j * d + k), _Index(d, lambda i, j, k: i))


def _read_endo(rd: _Reader, raw, d: int) -> SparseMat:
    return rd.entries(raw, (d, d), _Index(d, lambda i, j: j), _Index(d, lambda i, j: i))


def _positive(rd: _Reader, obj, key) -> int:
    v = rd.field(obj, key, int)
    if v < 1:
        rd.at(key).fail("must be positive")
    return v


# encoding -------------------------------------------------------------------

def to_data(obj) -> dict:
    if isinstance(obj, CoderPair):
        return {"kind": "coder_pair", "dim": obj.dim,
                "delta": _coproduct_entries(obj.delta, obj.dim), "psi": _endo_entries(obj.psi)}
    if isinstance(obj, BicomodulePair):
        m, d = obj.dim_m, obj.bicomodule.dim_c
        return {"kind": "bicomodule_pair", "dim_c": d, "dim_m": m,
                "rho_l": sorted([i, *divmod(r, m), fmt(v)] for r, i, v in obj.rho_l.entries()),
                "rho_r": sorted([i, *divmod(r, d), fmt(v)] for r, i, v in obj.rho_r.entries()),
                "psi_m": _endo_entries(obj.psi_m)}
    if isinstance(obj, Deformation):
        d = obj.dim
        return {"kind": "deformation", "order": obj.order, "base": to_data(obj.base),
                "deltas": [_coproduct_entries(x, d) for x in obj.deltas[1:]],
                "psis": [_endo_entries(x) for x in obj.psis[1:]]}
    if isinstance(obj, Gauge):
        return {"kind": "gauge", "dim": obj.dim, "order": obj.order,
                "phis": [_endo_entries(x) for x in obj.phis[1:]]}
    if isinstance(obj, DerPair):
        return {"kind": "der_pair", "dim": obj.dim,
                "mult": _mult_entries(obj.mult, obj.dim), "phi": _endo_entries(obj.phi)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _render(x, indent: int) -> str:
    pad = "  " * indent
    if isinstance(x, dict):
        if not x:
            return "{}"
        body = ",\n".join(f"{pad}  {json.dumps(k)}: {_render(x[k], indent + 1)}" for k in sorted(x))
        return "{\n" + body + "\n" + pad + "}"
    if isinstance(x, list):
        if all(not isinstance(v, (list, dict)) for v in x):
            return json.dumps(x)
        body = ",\n".join(f"{pad}  {_render(v, indent + 1)}" for v in x)
        return "[\n" + body + "\n" + pad + "]"
    return json.dumps(x)


def dumps_data(data) -> str:
    """Canonical text for JSON-compatible data: sorted keys, flat leaf lists inline."""
    return _render(data, 0) + "\n"


def dumps(obj) -> str:
    return dumps_data(to_data(obj))


# decoding -------------------------------------------------------------------

def from_data(data, dim_c: int | None = None):
    """Build the domain object for a parsed JSON document.

    Coder pairs are validated on construction (an invalid one raises
    :class:`~coderco.errors.AxiomViolationError`); the other kinds are
    only shape-checked here.
    """
    rd = _Reader("$")
    kind = rd.field(data, "kind")
    if kind not in KINDS:
        rd.at("kind").fail(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    try:
        if kind == "coder_pair":
            return _coder_pair(rd, data)
        if kind == "bicomodule_pair":
            return _bicomodule(rd, data, dim_c)
        if kind == "deformation":
            return _deformation(rd, data)
        if kind == "gauge":
            return _gauge(rd, data)
        return _der_pair(rd, data)
    except ShapeMismatchError as exc:
        raise ParseError(str(exc), "$") from exc


def _coder_pair(rd: _Reader, data) -> CoderPair:
    d = _positive(rd, data, "dim")
    delta = _read_coproduct(rd.at("delta"), rd.field(data, "delta", list), d)
    psi = _read_endo(rd.at("psi"), rd.field(data, "psi", list), d)
    return CoderPair(Coalgebra(d, delta, check=False), psi)


def _bicomodule(rd: _Reader, data, dim_c) -> BicomodulePair:
    m = _positive(rd, data, "dim_m")
    if "dim_c" in data:
        d = _positive(rd, data, "dim_c")
        if dim_c is not None and d != dim_c:
            rd.at("dim_c").fail(f"does not match the base dimension {dim_c}")
    elif dim_c is None:
        rd.fail("missing field 'dim_c' (needed when no base Coder pair is given)")
    else:
        d = dim_c
    rho_l = rd.at("rho_l").entries(rd.field(data, "rho_l", list), (m, d, m),
                                   _Index(d * m, lambda i, j, k: j * m + k), _Index(m, lambda i, j, k: i))
    rho_r = rd.at("rho_r").entries(rd.field(data, "rho_r", list), (m, m, d),
                                   _Index(m * d, lambda i, j, k: j * d + k), _Index(m, lambda i, j, k: i))
    psi_m = _read_endo(rd.at("psi_m"), rd.field(data, "psi_m", list), m)
    return BicomodulePair(Bicomodule(m, rho_l, rho_r), psi_m)


def _deformation(rd: _Reader, data) -> Deformation:
    n = rd.field(data, "order", int)
    if n < 0:
        rd.at("order").fail("must be nonnegative")
    base = _coder_pair(rd.at("base"), rd.field(data, "base", dict))
    deltas = rd.field(data, "deltas", list)
    psis = rd.field(data, "psis", list)
    if len(deltas) != n:
        rd.at("deltas").fail(f"expected {n} coefficient lists, got {len(deltas)}")
    if len(psis) != n:
        rd.at("psis").fail(f"expected {n} coefficient lists, got {len(psis)}")
    d = base.dim
    return Deformation.from_coefficients(
        base,
        [_read_coproduct(rd.at("deltas").at(i), x, d) for i, x in enumerate(deltas)],
        [_read_endo(rd.at("psis").at(i), x, d) for i, x in enumerate(psis)])


def _gauge(rd: _Reader, data) -> Gauge:
    d = _positive(rd, data, "dim")
    n = rd.field(data, "order", int)
    phis = rd.field(data, "phis", list)
    if len(phis) != n:
        rd.at("phis").fail(f"expected {n} coefficient lists, got {len(phis)}")
    mats = [_read_endo(rd.at("phis").at(i), x, d) for i, x in enumerate(phis)]
    return Gauge((SparseMat.identity(d),) + tuple(mats))


def _der_pair(rd: _Reader, data) -> DerPair:
    d = _positive(rd, data, "dim")
    mult = rd.at("mult").entries(rd.field(data, "mult", list), (d, d, d),
                                 _Index(d, lambda j, k, i: i), _Index(d * d, lambda j, k, i: j * d + k))
    phi = _read_endo(rd.at("phi"), rd.field(data, "phi", list), d)
    return DerPair(d, mult, phi)


def parse_json(text: str, source: str = "<input>"):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{source}:{exc.lineno}:{exc.colno}") from exc


def loads(text: str, dim_c: int | None = None, source: str = "<input>"):
    return from_data(parse_json(text, source), dim_c)


def load(path, dim_c: int | None = None):
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError("file is not UTF-8 text", str(p)) from exc
    return loads(text, dim_c, str(p))


def dump(obj, path) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")
