"""JSON encodings of the domain types (the CLI wire formats)."""

from __future__ import annotations

from .algebra import Involution, Matrix
from .graded import GroupElement
from .jordan import JordanContext
from .projline import Polarity, ProjectivePoint
from .rings import (ring_from_json, ring_to_json, scalar_from_json,
                    scalar_to_json)
from .symspace import GroupSpace, JordanUnitsSpace, ProjectiveSpace

STANDARD_GROUP = {
    "C": GroupElement.cayley,
    "F": GroupElement.swap,
    "J": GroupElement.jmat,
    "I11": GroupElement.i11,
}


def matrix_to_json(m):
    return [[scalar_to_json(m.ring, x) for x in row] for row in m.rows]


def matrix_from_json(ring, obj, n=None, m=None):
    if not isinstance(obj, list):
        # scalar shorthand for 1 x 1 matrices
        return Matrix(ring, [[scalar_from_json(ring, obj)]])
    rows = [[scalar_from_json(ring, x) for x in row] for row in obj]
    out = Matrix(ring, rows)
    if n is not None and out.shape != (n, m if m is not None else n):
        from .errors import ShapeMismatch
        raise ShapeMismatch(f"expected {n} rows, got {out.nrows}")
    return out


def element_to_json(x):
    if x.shape == (1, 1):
        return {"n": 1, "ring": ring_to_json(x.ring),
                "entries": scalar_to_json(x.ring, x.rows[0][0])}
    return {"n": x.nrows, "ring": ring_to_json(x.ring),
            "entries": matrix_to_json(x)}


def element_from_json(obj, ring=None):
    ring = ring_from_json(obj["ring"]) if ring is None else ring
    return matrix_from_json(ring, obj["entries"])


def involution_to_json(iota):
    if iota.kind == "transpose":
        return {"kind": "transpose"}
    return {"kind": "form_adjoint", "B": matrix_to_json(iota.form),
            "symmetry": iota.symmetry}


def involution_from_json(ring, obj):
    if obj is None or obj.get("kind", "transpose") == "transpose":
        return Involution()
    return Involution("form_adjoint",
                      matrix_from_json(ring, obj["B"]),
                      obj.get("symmetry", "symmetric"))


def group_to_json(g):
    out = {"blocks": [[matrix_to_json(b) for b in row]
                      for row in (g.blocks()[:2], g.blocks()[2:])]}
    if g.word is not None:
        out["word"] = [{"deg": deg, "v": matrix_to_json(v)} for deg, v in g.word]
    return out


def group_from_json(ring, n, obj):
    if isinstance(obj, str):
        try:
            return STANDARD_GROUP[obj](ring, n)
        except KeyError:
            raise ValueError(f"unknown standard matrix {obj!r}") from None
    if "standard" in obj:
        return STANDARD_GROUP[obj["standard"]](ring, n)
    if "blocks" in obj:
        (a, b), (c, d) = [[matrix_from_json(ring, m) for m in row]
                          for row in obj["blocks"]]
        word = None
        if "word" in obj:
            word = tuple((w["deg"], matrix_from_json(ring, w["v"]))
                         for w in obj["word"])
        return GroupElement.from_blocks(a, b, c, d, word=word)
    if "word" in obj:
        word = tuple((w["deg"], matrix_from_json(ring, w["v"]))
                     for w in obj["word"])
        return GroupElement.from_word(ring, n, word)
    raise ValueError("group element needs blocks, a word, or a standard name")


def point_to_json(E):
    return {"n": E.n, "ring": ring_to_json(E.ring),
            "rep": matrix_to_json(E.rep)}


def point_from_json(obj, ring=None, n=None):
    ring = ring_from_json(obj["ring"]) if ring is None else ring
    rep = matrix_from_json(ring, obj["rep"])
    return ProjectivePoint(rep, n if n is not None else rep.ncols)


def polarity_to_json(spec):
    out = {"mode": spec.mode}
    if spec.mode == "semilinear":
        out["j"] = spec.j
        out["involution"] = involution_to_json(spec.involution)
    out["S"] = group_to_json(spec.S)
    if spec.H is not None:
        out["H"] = matrix_to_json(spec.H)
    return out


def polarity_from_json(ring, n, obj):
    mode = obj["mode"]
    s = group_from_json(ring, n, obj["S"]) if "S" in obj else None
    h = matrix_from_json(ring, obj["H"]) if "H" in obj else None
    if mode == "linear":
        if s is None:
            s = GroupElement.identity(ring, n)
        return Polarity("linear", S=s, H=h)
    iota = involution_from_json(ring, obj.get("involution"))
    return Polarity("semilinear", S=s, j=obj["j"], involution=iota, H=h,
                    ring=ring, n=n)


def jordan_context_from_json(obj):
    ring = ring_from_json(obj.get("ring", "rational"))
    n = obj.get("n", 1)
    flavor = obj.get("flavor", "full")
    iota = None
    if flavor != "full":
        iota = involution_from_json(ring, obj.get("involution"))
    return JordanContext(n, ring, flavor, iota)


def symspace_context_from_json(obj):
    variant = obj["variant"]
    if variant == "jordan_units":
        jctx = jordan_context_from_json(obj)
        o = element_from_json(obj["o"], jctx.ring) if "o" in obj else None
        return JordanUnitsSpace(jctx, o)
    if variant == "group":
        ring = ring_from_json(obj.get("ring", "rational"))
        n = obj.get("n", 1)
        kind = obj.get("kind", "full_linear")
        iota = involution_from_json(ring, obj.get("involution")) \
            if kind == "unitary" else None
        return GroupSpace(n, ring, kind, iota)
    if variant == "projective":
        jctx = jordan_context_from_json(obj)
        pol = polarity_from_json(jctx.ring, jctx.n, obj["polarity"])
        o = point_from_json(obj["o"], jctx.ring, jctx.n) if "o" in obj else None
        return ProjectiveSpace(pol, jctx, o)
    raise ValueError(f"unknown context variant {variant!r}")
