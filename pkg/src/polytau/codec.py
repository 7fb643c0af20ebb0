"""JSON serialization of every value type and LaTeX export.

Polynomials serialize as::

    {"vars": "polytau/1", "terms": [{"c": "-1/12", "e": [["t1", 4]]}, ...]}

with terms in canonical order and exponent pairs sorted by (bank, index).
Variable tags are ``t<i>``, ``tp<i>`` and ``c<i>_<j>``.  Coefficients are
reduced ``p/q`` strings with ``q > 0``; floats never appear.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .errors import ParameterError
from .hirota import CheckReport, Identity
from .partitions import FrobeniusCoords, Partition
from .polyring import Bank, LaurentPoly, Poly, RatFunc, Rat, VarRef, rat_str, to_rat
from .tauforge import ConstMatrix, Family, TauPoly
from .wave import WaveSymbol

__all__ = [
    "VARS_TAG",
    "var_tag",
    "parse_var_tag",
    "poly_to_json",
    "poly_from_json",
    "laurent_to_json",
    "laurent_from_json",
    "ratfunc_to_json",
    "ratfunc_from_json",
    "constants_to_json",
    "constants_from_json",
    "tau_to_json",
    "tau_from_json",
    "report_to_json",
    "report_from_json",
    "wave_to_json",
    "wave_from_json",
    "to_json",
    "from_json",
    "dumps",
    "export_latex",
]

VARS_TAG = "polytau/1"
_TAG = re.compile(r"^(tp|t|c)(\d+)(?:_(\d+))?$")


def var_tag(v: VarRef) -> str:
    if v.bank == Bank.T:
        return f"t{v.index}"
    if v.bank == Bank.TPRIME:
        return f"tp{v.index}"
    return f"c{v.index}_{v.col}"


def parse_var_tag(tag: str) -> VarRef:
    m = _TAG.match(tag)
    if not m:
        raise ParameterError(f"bad variable tag {tag!r}")
    kind, idx, col = m.group(1), int(m.group(2)), m.group(3)
    if kind == "c":
        if col is None:
            raise ParameterError(f"parameter tag {tag!r} needs a column")
        return VarRef(Bank.C, idx, int(col))
    if col is not None:
        raise ParameterError(f"time tag {tag!r} takes no column")
    return VarRef(Bank.T if kind == "t" else Bank.TPRIME, idx)


# -- polynomials ----------------------------------------------------------------

def poly_to_json(p: Poly) -> dict:
    terms = []
    for mono, c in p.terms():
        e = [[var_tag(v), e] for v, e in sorted(mono, key=lambda ve: ve[0])]
        terms.append({"c": rat_str(c), "e": e})
    return {"vars": VARS_TAG, "terms": terms}


def poly_from_json(d: dict) -> Poly:
    if not isinstance(d, dict) or d.get("vars") != VARS_TAG:
        raise ParameterError(f"not a polynomial object (expected vars={VARS_TAG!r})")
    acc: dict = {}
    for term in d.get("terms", []):
        c = to_rat(term["c"])
        if not c:
            raise ParameterError("zero coefficient in serialized polynomial")
        exps: dict = {}
        for tag, e in term.get("e", []):
            v = parse_var_tag(tag)
            if v in exps or int(e) < 1:
                raise ParameterError(f"bad exponent entry {tag}^{e}")
            exps[v] = int(e)
        mono = Poly.monomial(exps, c)
        (key, _), = mono.items()
        if key in acc:
            raise ParameterError("repeated monomial in serialized polynomial")
        acc[key] = c
    return Poly(acc)


def laurent_to_json(a: LaurentPoly) -> dict:
    return {"zpow": {str(k): poly_to_json(v) for k, v in a.items()}}


def laurent_from_json(d: dict) -> LaurentPoly:
    return LaurentPoly({int(k): poly_from_json(v) for k, v in d["zpow"].items()})


def ratfunc_to_json(r: RatFunc) -> dict:
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def ratfunc_from_json(d: dict) -> RatFunc:
    return RatFunc(poly_from_json(d["num"]), poly_from_json(d["den"]))


# -- constants and tau-functions ----------------------------------------------------

def _entry_to_json(x: Poly):
    return rat_str(x.constant_term()) if x.is_constant() else poly_to_json(x)


def _entry_from_json(x) -> Poly:
    if isinstance(x, (str, int)):
        return Poly.const(to_rat(x))
    return poly_from_json(x)


def constants_to_json(c: ConstMatrix) -> list:
    return [[_entry_to_json(x) for x in col] for col in c.columns]


def constants_from_json(d) -> ConstMatrix:
    if d in (None, "zero"):
        return ConstMatrix.zero()
    return ConstMatrix(tuple(tuple(_entry_from_json(x) for x in col) for col in d))


def _lam_to_json(lam):
    if isinstance(lam, FrobeniusCoords):
        return {"a": list(lam.a), "b": list(lam.b)}
    return list(lam)


def _lam_from_json(family: Family, d):
    if isinstance(d, dict):
        return FrobeniusCoords(tuple(d["a"]), tuple(d["b"]))
    if family is Family.BKP:
        return tuple(int(x) for x in d)
    return Partition(d)


def tau_to_json(tau: TauPoly) -> dict:
    out = {
        "family": tau.family.value,
        "lambda": _lam_to_json(tau.lam),
        "constants": constants_to_json(tau.constants),
        "poly": poly_to_json(tau.poly),
    }
    if tau.d is not None:
        out["d"] = constants_to_json(tau.d)
    if tau.n is not None:
        out["n"] = tau.n
    return out


def tau_from_json(d: dict) -> TauPoly:
    family = Family(d["family"])
    return TauPoly(
        poly_from_json(d["poly"]),
        family,
        _lam_from_json(family, d["lambda"]),
        constants_from_json(d.get("constants")),
        constants_from_json(d["d"]) if "d" in d else None,
        d.get("n"),
    )


# -- reports and wave symbols ------------------------------------------------------

def _stat_to_json(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Rat):
        return rat_str(x)
    if isinstance(x, Poly):
        return poly_to_json(x)
    if isinstance(x, LaurentPoly):
        return laurent_to_json(x)
    if isinstance(x, dict):
        return {str(k): _stat_to_json(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_stat_to_json(v) for v in x]
    return str(x)


def report_to_json(r: CheckReport, quiet: bool = False) -> dict:
    """``residual`` is null for a passing report, and also when ``quiet``."""
    out = {
        "identity": str(r.identity),
        "passed": r.passed,
        "residual": None if (r.passed or quiet) else poly_to_json(r.residual),
        "stats": {} if quiet else _stat_to_json(r.stats),
    }
    if quiet and not r.passed:
        out["residual_terms"] = len(r.residual)
    if r.parts:
        out["parts"] = [report_to_json(p, quiet) for p in r.parts]
    return out


def report_from_json(d: dict) -> CheckReport:
    if d["residual"] is None and not d["passed"]:
        raise ParameterError("a failed report without residual cannot be restored")
    residual = Poly() if d["residual"] is None else poly_from_json(d["residual"])
    parts = tuple(report_from_json(p) for p in d.get("parts", ()))
    return CheckReport(Identity.parse(d["identity"]), bool(d["passed"]), residual,
                       dict(d.get("stats", {})), parts)


def wave_to_json(w: WaveSymbol) -> dict:
    return {"numerator": laurent_to_json(w.numerator),
            "denominator": poly_to_json(w.denominator),
            "stripped": w.stripped}


def wave_from_json(d: dict) -> WaveSymbol:
    return WaveSymbol(laurent_from_json(d["numerator"]), poly_from_json(d["denominator"]),
                      bool(d.get("stripped", True)))


# -- dispatch --------------------------------------------------------------------

def to_json(x) -> Any:
    if isinstance(x, Poly):
        return poly_to_json(x)
    if isinstance(x, LaurentPoly):
        return laurent_to_json(x)
    if isinstance(x, RatFunc):
        return ratfunc_to_json(x)
    if isinstance(x, TauPoly):
        return tau_to_json(x)
    if isinstance(x, CheckReport):
        return report_to_json(x)
    if isinstance(x, WaveSymbol):
        return wave_to_json(x)
    if isinstance(x, ConstMatrix):
        return constants_to_json(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def from_json(d) -> Any:
    """Recognize the object kind from its keys."""
    if isinstance(d, list):
        return constants_from_json(d)
    if "vars" in d:
        return poly_from_json(d)
    if "zpow" in d:
        return laurent_from_json(d)
    if "num" in d:
        return ratfunc_from_json(d)
    if "family" in d:
        return tau_from_json(d)
    if "identity" in d:
        return report_from_json(d)
    if "numerator" in d:
        return wave_from_json(d)
    raise ParameterError("unrecognized JSON object")


def dumps(obj, pretty: bool = False) -> str:
    if not isinstance(obj, (dict, list)):
        obj = to_json(obj)
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))


# -- LaTeX -----------------------------------------------------------------------

def _latex_var(v: VarRef) -> str:
    if v.bank == Bank.T:
        return f"t_{{{v.index}}}"
    if v.bank == Bank.TPRIME:
        return f"t'_{{{v.index}}}"
    return f"c_{{{v.index},{v.col}}}"


def _latex_coef(c) -> str:
    c = abs(c)
    if c.denominator == 1:
        return str(int(c.numerator))
    return f"\\frac{{{int(c.numerator)}}}{{{int(c.denominator)}}}"


def export_latex(p: Poly) -> str:
    """Canonical-order LaTeX, e.g. ``\\frac{1}{12}t_{1}^{4} + t_{2}^{2} - t_{1}t_{3}``."""
    p = getattr(p, "poly", p)
    if not p:
        return "0"
    out = []
    for n, (mono, c) in enumerate(p.terms()):
        body = "".join(_latex_var(v) + (f"^{{{e}}}" if e > 1 else "") for v, e in mono)
        mag = _latex_coef(c)
        text = body if (body and abs(c) == 1) else mag + body
        if n == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(("- " if c < 0 else "+ ") + text)
    return " ".join(out)
