"""Pure-Python kernel for the Hecke hot loops.

The compiled twin of this module is _speedups (Cython).  Both operate on
raw polynomial dicts {exponent: coefficient} and on Hecke supports
{element_index: poly_dict}, so the algebra layer can swap them freely.

Coefficients are kept inside signed 64-bit range: any intermediate that
leaves [-2^63, 2^63) raises OverflowError instead of continuing.  Python
ints would be exact anyway; the check keeps this backend semantically
identical to the compiled one, where wraparound would otherwise corrupt
results silently.
"""

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

BACKEND_NAME = "pure"


def _ck(c):
    if c > INT64_MAX or c < INT64_MIN:
        raise OverflowError("coefficient exceeds 64-bit range")
    return c


def poly_add_into(acc: dict, p: dict, scale: int = 1, shift: int = 0) -> None:
    """acc += scale * v^shift * p, in place."""
    if scale == 0:
        return
    for e, c in p.items():
        t = e + shift
        s = acc.get(t, 0) + scale * c
        if s:
            acc[t] = _ck(s)
        elif t in acc:
            del acc[t]


def poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            t = e1 + e2
            s = out.get(t, 0) + c1 * c2
            if s:
                out[t] = _ck(s)
            elif t in out:
                del out[t]
    return out


def poly_mul_add_into(acc: dict, a: dict, b: dict) -> None:
    """acc += a * b, in place."""
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            t = e1 + e2
            s = acc.get(t, 0) + c1 * c2
            if s:
                acc[t] = _ck(s)
            elif t in acc:
                del acc[t]


def hecke_left_delta_s(h: dict, smul: list, length: list) -> dict:
    """delta_s . h for a Hecke support h = {x_index: poly_dict}.

    smul[x] must hold the index of s*x for every x in the support;
    length[] the length table.  Uses the case formula
    delta_s delta_x = delta_sx                       if l(sx) > l(x)
                    = delta_sx + (v^-1 - v) delta_x  otherwise.
    """
    out: dict = {}
    for x, p in h.items():
        sx = smul[x]
        acc = out.get(sx)
        if acc is None:
            acc = out[sx] = {}
        poly_add_into(acc, p)
        if not acc:
            del out[sx]
        if length[sx] < length[x]:
            acc = out.get(x)
            if acc is None:
                acc = out[x] = {}
            poly_add_into(acc, p, 1, -1)
            poly_add_into(acc, p, -1, 1)
            if not acc:
                del out[x]
    return out


def hecke_left_bs(h: dict, smul: list, length: list) -> dict:
    """b_s . h = delta_s . h + v . h (the KL-recursion inner step)."""
    out = hecke_left_delta_s(h, smul, length)
    for x, p in h.items():
        acc = out.get(x)
        if acc is None:
            acc = out[x] = {}
        poly_add_into(acc, p, 1, 1)
        if not acc:
            del out[x]
    return out
