"""JSON wire formats.

Rationals travel as exact "p/q" strings.  A Puiseux series is
{"terms": [{"exp": "p/q", "coef": "p/q" | {"a","b","d"}}], "trunc": "p/q" | "inf"};
a matrix is {"symmetric": bool, "entries": [["p/q", ...], ...]}; a tree is
{"nodes": k, "leaves": [{"color", "index", "node"}], "edges": [{"u","v","len"}]}.
Decoding is the exact inverse of encoding for matrices, series, trees, and
certificates.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .lifts import LiftCertificate
from .monomials import SignedMonomialClass
from .newton import NewtonEdge
from .puiseux import PuiseuxSeries
from .quadext import QuadExt
from .trees import BicoloredTree, Leaf
from .tropmat import TropMatrix


def frac_to_str(x: Fraction) -> str:
    return str(Fraction(x))


def frac_from_str(s) -> Fraction:
    return Fraction(s)


def encode_series(s: PuiseuxSeries) -> dict:
    terms = []
    for exp, coef in s.terms:
        if isinstance(coef, QuadExt):
            cval = {"a": frac_to_str(coef.a), "b": frac_to_str(coef.b), "d": frac_to_str(coef.d)}
        else:
            cval = frac_to_str(coef)
        terms.append({"exp": frac_to_str(exp), "coef": cval})
    return {"terms": terms, "trunc": "inf" if s.trunc is None else frac_to_str(s.trunc)}


def decode_series(obj: dict) -> PuiseuxSeries:
    pairs = []
    for term in obj["terms"]:
        coef = term["coef"]
        if isinstance(coef, dict):
            coef = QuadExt(
                frac_from_str(coef["a"]), frac_from_str(coef["b"]), frac_from_str(coef["d"])
            )
        else:
            coef = frac_from_str(coef)
        pairs.append((frac_from_str(term["exp"]), coef))
    trunc = obj.get("trunc", "inf")
    return PuiseuxSeries.make(pairs, None if trunc == "inf" else frac_from_str(trunc))


def encode_matrix(a: TropMatrix) -> dict:
    return {
        "symmetric": a.symmetric,
        "entries": [[frac_to_str(x) for x in row] for row in a.entries],
    }


def decode_matrix(obj: dict) -> TropMatrix:
    return TropMatrix.make(
        [[frac_from_str(x) for x in row] for row in obj["entries"]],
        symmetric=bool(obj.get("symmetric", False)),
    )


def encode_tree(t: BicoloredTree) -> dict:
    return {
        "nodes": t.nodes,
        "leaves": [
            {"color": l.color, "index": l.index, "node": l.node} for l in t.leaves
        ],
        "edges": [
            {"u": u, "v": v, "len": frac_to_str(w)} for u, v, w in t.edge_list()
        ],
    }


def decode_tree(obj: dict) -> BicoloredTree:
    nodes = int(obj["nodes"])
    adj: dict = {u: {} for u in range(nodes)}
    for e in obj["edges"]:
        u, v, w = int(e["u"]), int(e["v"]), frac_from_str(e["len"])
        adj[u][v] = w
        adj[v][u] = w
    leaves = tuple(
        Leaf(l["color"], int(l["index"]), int(l["node"])) for l in obj["leaves"]
    )
    return BicoloredTree(nodes, adj, leaves)


def encode_certificate(cert: LiftCertificate) -> dict:
    return {
        "target": encode_matrix(cert.target),
        "lift": [[encode_series(e) for e in row] for row in cert.lift],
        "claimed": cert.claimed,
        "positivity": cert.positivity,
        "transcript": cert.transcript,
        "seed": cert.seed,
        "method": cert.method,
    }


def decode_certificate(obj: dict) -> LiftCertificate:
    return LiftCertificate(
        target=decode_matrix(obj["target"]),
        lift=tuple(tuple(decode_series(e) for e in row) for row in obj["lift"]),
        claimed=obj["claimed"],
        positivity=obj["positivity"],
        transcript=list(obj.get("transcript", [])),
        seed=obj.get("seed"),
        method=obj.get("method", ""),
    )


def encode_class(cls: SignedMonomialClass) -> dict:
    return {
        "monomial": cls.monomial_str(),
        "exponent": [list(r) for r in cls.exponent],
        "sign": cls.sign,
        "coefficient": cls.coefficient,
        "representative": list(cls.representative),
        "cycle_type": list(cls.cycle_type),
        "graph": [
            {"component": kind, "vertices": [v + 1 for v in verts]}
            for kind, verts in cls.graph_components()
        ],
    }


def encode_value(v):
    """Best-effort JSON encoding for report payloads."""
    if isinstance(v, Fraction):
        return frac_to_str(v)
    if isinstance(v, TropMatrix):
        return encode_matrix(v)
    if isinstance(v, PuiseuxSeries):
        return encode_series(v)
    if isinstance(v, SignedMonomialClass):
        return encode_class(v)
    if isinstance(v, NewtonEdge):
        return {
            "u": v.u.monomial_str(),
            "v": v.v.monomial_str(),
            "lattice_length": v.lattice_length,
            "midpoint": None if v.midpoint is None else v.midpoint.monomial_str(),
            "union_cycle_length": v.union_cycle_length,
        }
    if isinstance(v, dict):
        return {str(k): encode_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [encode_value(x) for x in v]
    if isinstance(v, frozenset):
        return sorted(encode_value(x) for x in v)
    if v is None or isinstance(v, (bool, int, str)):
        return v
    return str(v)


def dumps(obj) -> str:
    return json.dumps(encode_value(obj), indent=2, sort_keys=True)
