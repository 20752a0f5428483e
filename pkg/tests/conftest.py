import pytest

from rslist.galois import GF8_POLY, GF16_POLY, Field
from rslist.koetter import InterpolationPoint, InterpolationProblem
from rslist.polynomials import BiPoly, UniPoly


@pytest.fixture(scope="session")
def gf8():
    return Field(3, GF8_POLY)


@pytest.fixture(scope="session")
def gf16():
    return Field(4, GF16_POLY)


def worked_points(f):
    a = f.from_exponent
    return [
        InterpolationPoint(a(1), a(4), 2),
        InterpolationPoint(a(2), a(6), 1),
        InterpolationPoint(a(2), a(3), 1),
        InterpolationPoint(a(3), 1, 1),
        InterpolationPoint(a(3), a(1), 1),
        InterpolationPoint(1, a(1), 1),
        InterpolationPoint(1, 1, 1),
    ]


@pytest.fixture
def worked_problem(gf8):
    """The worked GF(8) instance: k = 2, seven points, N = 9."""
    return InterpolationProblem(gf8, worked_points(gf8), 2)


def parse_poly_text(f, text):
    """Inverse of the canonical to_text form, for golden-table comparisons."""
    text = text.strip()
    if text == "0":
        return BiPoly.zero(f)
    rows = {}
    for part in _split_terms(text):
        ypow, uni = _split_y(part)
        rows.setdefault(ypow, []).append(uni)
    max_j = max(rows)
    ycoeffs = []
    for j in range(max_j + 1):
        coeffs = {}
        for uni in rows.get(j, []):
            for xpow, val in _parse_uni(f, uni):
                coeffs[xpow] = coeffs.get(xpow, 0) ^ val
        arr = [0] * (max(coeffs) + 1 if coeffs else 0)
        for i, v in coeffs.items():
            arr[i] = v
        ycoeffs.append(UniPoly(f, arr))
    return BiPoly(f, ycoeffs)


def _split_terms(text):
    parts = []
    depth = 0
    cur = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and text[i : i + 3] == " + ":
            parts.append("".join(cur))
            cur = []
            i += 3
            continue
        cur.append(ch)
        i += 1
    parts.append("".join(cur))
    return parts


def _split_y(part):
    if "*Y^" in part:
        body, ypow = part.rsplit("*Y^", 1)
        return int(ypow), body
    if part.endswith("*Y"):
        return 1, part[:-2]
    if part.startswith("Y^"):
        return int(part[2:]), "1"
    if part == "Y":
        return 1, "1"
    return 0, part


def _parse_uni(f, text):
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    out = []
    for term in text.split(" + "):
        term = term.strip()
        if "*X^" in term:
            elem, xp = term.split("*X^")
            out.append((int(xp), f.parse_element(elem)))
        elif "*X" in term:
            elem, _ = term.split("*X")
            out.append((1, f.parse_element(elem)))
        elif term.startswith("X^"):
            out.append((int(term[2:]), 1))
        elif term == "X":
            out.append((1, 1))
        else:
            out.append((0, f.parse_element(term)))
    return out


def random_unipoly(f, rng, max_deg):
    return UniPoly(f, [rng.randrange(f.q) for _ in range(rng.randint(0, max_deg) + 1)])


def random_bipoly(f, rng, max_xdeg, max_ydeg, nonzero=True):
    while True:
        rows = [
            [rng.randrange(f.q) for _ in range(rng.randint(0, max_xdeg) + 1)]
            for _ in range(rng.randint(0, max_ydeg) + 1)
        ]
        p = BiPoly.from_arrays(f, rows)
        if not (nonzero and p.is_zero):
            return p


def random_planted_problem(rng, fields, max_n=15, max_k=5, max_constraints=12, max_mult=2):
    """A small instance with a planted message; may carry errors and repeated x's."""
    f = rng.choice(fields)
    k = rng.randint(2, max_k)
    nonzero = f.all_elements()[1:]
    n = rng.randint(k + 1, min(max_n, len(nonzero)))
    xs = rng.sample(nonzero, n)
    fpoly = UniPoly(f, [rng.randrange(f.q) for _ in range(k)])
    points = []
    budget = max_constraints
    for x in xs:
        m = rng.randint(1, max_mult)
        if m * (m + 1) // 2 > budget:
            m = 1
        if budget <= 0:
            break
        y = fpoly.eval_at(x)
        if rng.random() < 0.25:
            y ^= rng.randrange(1, f.q)
        points.append(InterpolationPoint(x, y, m))
        budget -= m * (m + 1) // 2
    if len(points) < k:
        return random_planted_problem(rng, fields, max_n, max_k, max_constraints, max_mult)
    return InterpolationProblem(f, points, k), fpoly
