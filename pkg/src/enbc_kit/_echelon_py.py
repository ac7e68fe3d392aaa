"""Pure-Python sparse echelon rank; the reference for the compiled kernel.

Rows are sequences of ``(column, value)`` pairs with integer values. Over the
integers (``modulus == 0``) elimination is fraction-free: each pivot step forms
``b*r - a*p`` and divides out the row content, so values stay small and the
result is the exact rank over Q.
"""
from math import gcd


def _primitive(row):
    g = gcd(*row.values())
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


def echelon_rank(rows, modulus=0):
    pivots = {}
    for pairs in rows:
        if modulus:
            row = {c: v % modulus for c, v in pairs if v % modulus}
        else:
            row = {c: v for c, v in pairs if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                if modulus:
                    inv = pow(row[lead], -1, modulus)
                    row = {c: v * inv % modulus for c, v in row.items()}
                else:
                    row = _primitive(row)
                pivots[lead] = row
                break
            a = row[lead]
            if modulus:
                # pivot rows are monic
                new = dict(row)
                for c, v in piv.items():
                    w = (new.get(c, 0) - a * v) % modulus
                    if w:
                        new[c] = w
                    else:
                        new.pop(c, None)
            else:
                b = piv[lead]
                g = gcd(a, b)
                ma, mb = b // g, a // g
                new = {c: ma * v for c, v in row.items()}
                for c, v in piv.items():
                    w = new.get(c, 0) - mb * v
                    if w:
                        new[c] = w
                    else:
                        new.pop(c, None)
                if new:
                    new = _primitive(new)
            row = new
    return len(pivots)
