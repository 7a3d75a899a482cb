"""Textual (JSON) encodings for states, elements and operators.

All coefficients are emitted as explicit "p/q" strings and parsed back
with exact rational arithmetic, so round trips are bit-exact.  Emitted
term lists are canonically sorted.

A lattice vector is an object with integer arrays "e", "delta", "d";
arrays may be omitted on input when a LatticeConfig is supplied (they
then mean zero), and an omitted "delta"/"d" without a config is read as
q = 1.  Output always carries all three arrays so that every emitted
object is self-describing.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .lattice import LatticeConfig, LatticeVector
from .fock_lattice import LatticeFockState
from .fock_boson import BosonState
from .superalgebra import GLElement, ToroidalElement
from . import representation as rep


def frac_to_str(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def frac_from_str(s) -> Fraction:
    return Fraction(s)


def vector_to_obj(v: LatticeVector) -> dict:
    return {"e": list(v.e), "delta": list(v.delta), "d": list(v.d)}


def vector_from_obj(obj, config: LatticeConfig | None = None) -> LatticeVector:
    if config is not None:
        e = tuple(int(x) for x in obj.get("e", (0,) * config.M))
        delta = tuple(int(x) for x in obj.get("delta", (0,) * (config.q - 1)))
        d = tuple(int(x) for x in obj.get("d", (0,) * (config.q - 1)))
        if len(e) != config.M or len(delta) != config.q - 1 or len(d) != config.q - 1:
            raise ValueError(f"vector {obj} does not fit M={config.M}, q={config.q}")
    else:
        if "e" not in obj:
            raise ValueError("vector object without 'e' needs an explicit config")
        e = tuple(int(x) for x in obj["e"])
        delta = tuple(int(x) for x in obj.get("delta", ()))
        d = tuple(int(x) for x in obj.get("d", ()))
        if len(delta) != len(d):
            # one of the blocks was omitted; zero-fill to the longer one
            n = max(len(delta), len(d))
            delta = delta + (0,) * (n - len(delta))
            d = d + (0,) * (n - len(d))
    return LatticeVector(e, delta, d)


def _monomial_to_obj(mono) -> list:
    counts = {}
    for f in mono:
        counts[f] = counts.get(f, 0) + 1
    return [
        {"basis": b, "mode": n, "power": p}
        for (b, n), p in sorted(counts.items())
    ]


def _monomial_from_obj(obj) -> tuple:
    factors = []
    for item in obj:
        b, n, p = int(item["basis"]), int(item["mode"]), int(item.get("power", 1))
        if n < 1 or p < 1:
            raise ValueError(f"bad monomial factor {item}")
        factors.extend([(b, n)] * p)
    return tuple(sorted(factors))


def lattice_state_to_obj(s: LatticeFockState) -> list:
    return [
        {
            "coeff": frac_to_str(c),
            "gamma": vector_to_obj(g),
            "monomial": _monomial_to_obj(u),
        }
        for (g, u), c in s.sorted_terms()
    ]


def lattice_state_from_obj(obj, config: LatticeConfig | None = None) -> LatticeFockState:
    terms = []
    for item in obj:
        g = vector_from_obj(item["gamma"], config)
        u = _monomial_from_obj(item.get("monomial", []))
        terms.append(((g, u), frac_from_str(item["coeff"])))
    return LatticeFockState(terms)


def _modes_to_obj(modes) -> list:
    return [{"flavor": f, "doubled_mode": k} for f, k in modes]


def _modes_from_obj(obj) -> tuple:
    return tuple(sorted((int(x["flavor"]), int(x["doubled_mode"])) for x in obj))


def boson_state_to_obj(s: BosonState) -> list:
    return [
        {
            "coeff": frac_to_str(c),
            "phi": _modes_to_obj(p),
            "phi_star": _modes_to_obj(ps),
        }
        for (p, ps), c in s.sorted_terms()
    ]


def boson_state_from_obj(obj) -> BosonState:
    terms = []
    for item in obj:
        key = (_modes_from_obj(item.get("phi", [])), _modes_from_obj(item.get("phi_star", [])))
        terms.append((key, frac_from_str(item["coeff"])))
    return BosonState(terms)


def tensor_state_to_obj(s: rep.TensorState) -> list:
    return [
        {
            "coeff": frac_to_str(c),
            "gamma": vector_to_obj(g),
            "monomial": _monomial_to_obj(u),
            "phi": _modes_to_obj(p),
            "phi_star": _modes_to_obj(ps),
        }
        for ((g, u), (p, ps)), c in s.sorted_terms()
    ]


def tensor_state_from_obj(obj, config: LatticeConfig | None = None) -> rep.TensorState:
    terms = []
    for item in obj:
        g = vector_from_obj(item["gamma"], config)
        u = _monomial_from_obj(item.get("monomial", []))
        p = _modes_from_obj(item.get("phi", []))
        ps = _modes_from_obj(item.get("phi_star", []))
        terms.append((((g, u), (p, ps)), frac_from_str(item["coeff"])))
    return rep.TensorState(terms)


def gl_element_to_obj(x: GLElement) -> list:
    return [
        {"coeff": frac_to_str(c), "i": i, "j": j} for (i, j), c in x.sorted_terms()
    ]


def gl_element_from_obj(obj) -> GLElement:
    return GLElement([(((int(t["i"]), int(t["j"]))), frac_from_str(t["coeff"])) for t in obj])


def toroidal_to_obj(x: ToroidalElement) -> list:
    out = []
    for key, c in x.sorted_terms():
        if key[0] == "T":
            out.append(
                {
                    "coeff": frac_to_str(c),
                    "kind": "T",
                    "i": key[1],
                    "j": key[2],
                    "exponent": list(key[3]),
                }
            )
        else:
            out.append(
                {
                    "coeff": frac_to_str(c),
                    "kind": "K",
                    "direction": key[1],
                    "exponent": list(key[2]),
                }
            )
    return out


def toroidal_from_obj(obj) -> ToroidalElement:
    terms = []
    for t in obj:
        exp = tuple(int(x) for x in t["exponent"])
        if t["kind"] == "T":
            terms.append((("T", int(t["i"]), int(t["j"]), exp), frac_from_str(t["coeff"])))
        elif t["kind"] == "K":
            terms.append((("K", int(t["direction"]), exp), frac_from_str(t["coeff"])))
        else:
            raise ValueError(f"unknown toroidal term kind {t['kind']!r}")
    return ToroidalElement(terms)


def operator_to_obj(op) -> dict:
    if isinstance(op, rep.VertexMode):
        return {"kind": "vertex", "alpha": vector_to_obj(op.alpha), "index": op.index}
    if isinstance(op, rep.Current):
        return {"kind": "current", "alpha": vector_to_obj(op.alpha), "mode": op.mode}
    if isinstance(op, rep.PhiMode):
        return {"kind": "phi", "flavor": op.flavor, "r": op.r}
    if isinstance(op, rep.PhiStarMode):
        return {"kind": "phi_star", "flavor": op.flavor, "r": op.r}
    if isinstance(op, rep.DiagCurrent):
        return {
            "kind": "diag_current",
            "alpha": vector_to_obj(op.alpha),
            "mode": op.mode,
            "mu": list(op.mu),
        }
    if isinstance(op, rep.SOp):
        return {"kind": "s_op", "i": op.i, "j": op.j, "mu": list(op.mu), "n": op.n}
    if isinstance(op, rep.CentralImage):
        return {"kind": "central", "mbar": list(op.mbar), "direction": op.direction}
    if isinstance(op, rep.NormalPairSum):
        return {
            "kind": "normal_pair_sum",
            "a": vector_to_obj(op.a),
            "b": vector_to_obj(op.b),
            "n": op.n,
        }
    if isinstance(op, rep.VertexProductSum):
        return {
            "kind": "vertex_product_sum",
            "a": vector_to_obj(op.a),
            "mu": list(op.mu),
            "index": op.index,
        }
    if isinstance(op, rep.OpProduct):
        return {"kind": "product", "factors": [operator_to_obj(f) for f in op.factors]}
    if isinstance(op, rep.OpSum):
        return {
            "kind": "sum",
            "terms": [
                {"coeff": frac_to_str(c), "op": operator_to_obj(o)} for c, o in op.terms
            ],
        }
    raise TypeError(f"not a serialisable operator: {op!r}")


def operator_from_obj(obj, config: LatticeConfig | None = None):
    kind = obj["kind"]
    if kind == "vertex":
        return rep.VertexMode(vector_from_obj(obj["alpha"], config), int(obj["index"]))
    if kind == "current":
        return rep.Current(vector_from_obj(obj["alpha"], config), int(obj["mode"]))
    if kind == "phi":
        return rep.PhiMode(int(obj["flavor"]), int(obj["r"]))
    if kind == "phi_star":
        return rep.PhiStarMode(int(obj["flavor"]), int(obj["r"]))
    if kind == "diag_current":
        return rep.DiagCurrent(
            vector_from_obj(obj["alpha"], config), int(obj["mode"]), tuple(obj.get("mu", ()))
        )
    if kind == "s_op":
        return rep.SOp(int(obj["i"]), int(obj["j"]), tuple(obj.get("mu", ())), int(obj["n"]))
    if kind == "central":
        return rep.CentralImage(tuple(obj["mbar"]), int(obj["direction"]))
    if kind == "normal_pair_sum":
        return rep.NormalPairSum(
            vector_from_obj(obj["a"], config), vector_from_obj(obj["b"], config), int(obj["n"])
        )
    if kind == "vertex_product_sum":
        return rep.VertexProductSum(
            vector_from_obj(obj["a"], config), tuple(obj["mu"]), int(obj["index"])
        )
    if kind == "product":
        return rep.OpProduct(tuple(operator_from_obj(f, config) for f in obj["factors"]))
    if kind == "sum":
        return rep.OpSum(
            tuple(
                (frac_from_str(t["coeff"]), operator_from_obj(t["op"], config))
                for t in obj["terms"]
            )
        )
    raise ValueError(f"unknown operator kind {kind!r}")


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, newline terminated."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
