"""Matrix models of the two-letter modules and exhaustive verification of the
quiver Hecke (KLR) defining relations.

Everything is exact: matrix entries and structure constants are rationals.
Modules here are 1- or 2-dimensional, so matrices are plain tuples of tuples
of Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanDatum
from .decomposition import DeltaFactor, kashiwara_word

Matrix = tuple[tuple[Fraction, ...], ...]


# ---------------------------------------------------------------------------
# Tiny exact matrix helpers


def _zeros(n: int) -> Matrix:
    return tuple((Fraction(0),) * n for _ in range(n))


def _eye(n: int) -> Matrix:
    return tuple(tuple(Fraction(1 if r == c else 0) for c in range(n))
                 for r in range(n))


def _add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def _scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def _mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(sum((a[r][k] * b[k][c] for k in range(n)),
                           Fraction(0)) for c in range(n)) for r in range(n))


def _pow(a: Matrix, p: int) -> Matrix:
    out = _eye(len(a))
    for _ in range(p):
        out = _mul(out, a)
    return out


# ---------------------------------------------------------------------------
# The structure polynomials


@dataclass(frozen=True)
class QPolynomial:
    """Table (i, j) -> {(p, q): coefficient} of the structure polynomials."""
    datum: CartanDatum
    table: dict[tuple[int, int], dict[tuple[int, int], Fraction]]

    def poly(self, i: int, j: int) -> dict[tuple[int, int], Fraction]:
        return self.table[(i, j)]

    def evaluate(self, i: int, j: int, xu: Matrix, xv: Matrix) -> Matrix:
        out = _zeros(len(xu))
        for (p, q), c in self.poly(i, j).items():
            out = _add(out, _scale(c, _mul(_pow(xu, p), _pow(xv, q))))
        return out


def eta_exponents(datum: CartanDatum, i: int, j: int):
    """Admissible (p, q) with d_i p + d_j q = -(alpha_i|alpha_j), p, q > 0."""
    di, dj = datum.symmetrizers[i - 1], datum.symmetrizers[j - 1]
    target = -di * datum.a(i, j)
    out = []
    p = 1
    while di * p < target:
        rem = target - di * p
        if rem % dj == 0:
            out.append((p, rem // dj))
        p += 1
    return out


def build_q(datum: CartanDatum, zeta=None, eta=None) -> QPolynomial:
    """Structure polynomials; defaults are all-ones zeta and zero eta.

    zeta maps ordered pairs (i, j) to nonzero rationals, eta maps
    (i, j, p, q) to rationals; both must satisfy the symmetry constraints.
    """
    idx = datum.index_set
    zeta = {k: Fraction(v) for k, v in (zeta or {}).items()}
    eta = {k: Fraction(v) for k, v in (eta or {}).items()}
    for i in idx:
        for j in idx:
            if i == j:
                continue
            zeta.setdefault((i, j), Fraction(1))
            if zeta[(i, j)] == 0:
                raise ValueError(f"zeta[{i},{j}] must be nonzero")
    for (i, j), z in zeta.items():
        if datum.a(i, j) == 0 and z != zeta[(j, i)]:
            raise ValueError(f"zeta[{i},{j}] must equal zeta[{j},{i}]")
    for (i, j, p, q), v in eta.items():
        if (p, q) not in eta_exponents(datum, i, j):
            raise ValueError(f"eta exponent ({p},{q}) not admissible for "
                             f"({i},{j})")
        if v != eta.get((j, i, q, p), v):
            raise ValueError(f"eta[{i},{j},{p},{q}] must equal "
                             f"eta[{j},{i},{q},{p}]")

    table: dict[tuple[int, int], dict[tuple[int, int], Fraction]] = {}
    for i in idx:
        for j in idx:
            if i == j:
                table[(i, j)] = {}
            elif datum.a(i, j) == 0:
                table[(i, j)] = {(0, 0): zeta[(i, j)]}
            else:
                poly = {(-datum.a(i, j), 0): zeta[(i, j)],
                        (0, -datum.a(j, i)): zeta[(j, i)]}
                for p, q in eta_exponents(datum, i, j):
                    c = eta.get((i, j, p, q), Fraction(0))
                    if c:
                        poly[(p, q)] = poly.get((p, q), Fraction(0)) + c
                table[(i, j)] = {k: v for k, v in poly.items() if v}
    return QPolynomial(datum, table)


def random_choices(datum: CartanDatum, rng):
    """Admissible randomized (zeta, eta) drawn from small nonzero rationals."""
    def fr(nonzero=False):
        while True:
            x = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
            if x or not nonzero:
                return x

    zeta, eta = {}, {}
    for i in datum.index_set:
        for j in datum.index_set:
            if i == j or (i, j) in zeta:
                continue
            z = fr(nonzero=True)
            zeta[(i, j)] = z
            if datum.a(i, j) == 0:
                zeta[(j, i)] = z
            else:
                zeta[(j, i)] = fr(nonzero=True)
            for p, q in eta_exponents(datum, i, j):
                v = fr()
                eta[(i, j, p, q)] = v
                eta[(j, i, q, p)] = v
    return zeta, eta


# ---------------------------------------------------------------------------
# Matrix modules


@dataclass
class MatrixModule:
    """Basis labels with attached index sequences and degrees, plus the
    action matrices for the dots and crossings (columns act on basis order)."""
    datum: CartanDatum
    length: int                      # number of strands m
    labels: tuple[str, ...]
    words: tuple[tuple[int, ...], ...]   # index sequence of each basis vector
    degrees: tuple[int, ...]
    x: tuple[Matrix, ...]            # x_1 .. x_m
    tau: tuple[Matrix, ...]          # tau_1 .. tau_{m-1}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def projector(self, iword) -> Matrix:
        iword = tuple(iword)
        return tuple(tuple(Fraction(1 if r == c and self.words[r] == iword
                                    else 0) for c in range(self.dim))
                     for r in range(self.dim))

    def support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(dict.fromkeys(self.words))


def _module_case(datum: CartanDatum, a: int, b: int) -> str:
    t, n = datum.type_tag, datum.rank
    if t == "B" and a < 0 and b > 0:
        return "B2"
    if t == "D" and a < 0 and -a <= n - 1 and 0 < b <= n - 1:
        return "D2"
    return "1"


def build_delta_module(datum: CartanDatum, factor,
                       q_table: QPolynomial) -> MatrixModule:
    """Explicit matrix model of a two-letter module (multiplicity ignored)."""
    a, b = (factor.a, factor.b) if isinstance(factor, DeltaFactor) else factor
    n = datum.rank
    case = _module_case(datum, a, b)
    if case == "1":
        w = kashiwara_word(datum, a, b)
        m = len(w)
        return MatrixModule(datum, m, ("v",), (w,), (0,),
                            tuple(_zeros(1) for _ in range(m)),
                            tuple(_zeros(1) for _ in range(m - 1)))
    if case == "B2":
        w = kashiwara_word(datum, a, b)
        m = len(w)
        ds = [k for k in range(m - 1) if w[k] == w[k + 1]]
        if len(ds) != 1:
            raise AssertionError(
                "expected a unique repeated adjacent index")  # pragma: no cover
        d = ds[0]  # 0-based position of tau_d / x_d, x_{d+1}
        deg_v = -datum.bilinear(w[d], w[d + 1])
        x = [_zeros(2) for _ in range(m)]
        tau = [_zeros(2) for _ in range(m - 1)]
        one = Fraction(1)
        x[d] = ((Fraction(0), -one), (Fraction(0), Fraction(0)))
        x[d + 1] = ((Fraction(0), one), (Fraction(0), Fraction(0)))
        tau[d] = ((Fraction(0), Fraction(0)), (one, Fraction(0)))
        return MatrixModule(datum, m, ("u", "v"), (w, w), (0, deg_v),
                            tuple(x), tuple(tau))
    # case == "D2"
    wu = kashiwara_word(datum, a, b)             # runs through n
    wv = kashiwara_word(datum, a, b, route="alt")
    m = len(wu)
    ds = [k for k in range(m - 1)
          if wu[:k] + (wu[k + 1], wu[k]) + wu[k + 2:] == wv]
    if len(ds) != 1:
        raise AssertionError(
            "expected a unique aligning transposition")  # pragma: no cover
    d = ds[0]
    zeta = q_table.poly(n, n - 1)[(0, 0)]
    deg_v = -datum.bilinear(wu[d], wu[d + 1])  # zero: the pair commutes
    x = [_zeros(2) for _ in range(m)]
    tau = [_zeros(2) for _ in range(m - 1)]
    tau[d] = ((Fraction(0), Fraction(1)), (zeta, Fraction(0)))
    return MatrixModule(datum, m, ("u", "v"), (wu, wv), (0, deg_v),
                        tuple(x), tuple(tau))


# ---------------------------------------------------------------------------
# Relation checking


def _sigma(word, k):
    return word[:k] + (word[k + 1], word[k]) + word[k + 2:]


def check_relations(datum: CartanDatum, module: MatrixModule,
                    q_table: QPolynomial) -> list[dict]:
    """Verify every defining relation on the module; returns a report.

    Each entry is {relation, indices, basis_element, status}; failures carry
    the offending basis label, passing checks have basis_element None.
    """
    m, dim = module.length, module.dim
    report = []

    def check(relation, indices, lhs, rhs):
        if lhs == rhs:
            report.append({"relation": relation, "indices": list(indices),
                           "basis_element": None, "status": "ok"})
            return
        bad = next(module.labels[c] for c in range(dim)
                   if any(lhs[r][c] != rhs[r][c] for r in range(dim)))
        report.append({"relation": relation, "indices": list(indices),
                       "basis_element": bad, "status": "fail"})

    support = module.support()

    class _Proj(dict):
        def __missing__(self, w):
            self[w] = module.projector(w)
            return self[w]

    proj = _Proj()
    extended = list(dict.fromkeys(
        list(support) + [_sigma(w, k) for k in range(m - 1)
                         for w in support]))

    # idempotents
    total = _zeros(dim)
    for w in support:
        total = _add(total, proj[w])
        for w2 in support:
            expect = proj[w] if w == w2 else _zeros(dim)
            check("idempotent-orthogonality", (w, w2),
                  _mul(proj[w], proj[w2]), expect)
    check("idempotent-sum", (), total, _eye(dim))

    # dots commute and commute with idempotents
    for k in range(m):
        for l in range(k + 1, m):
            check("dot-commute", (k + 1, l + 1),
                  _mul(module.x[k], module.x[l]),
                  _mul(module.x[l], module.x[k]))
        for w in support:
            check("dot-idempotent", (k + 1, w),
                  _mul(module.x[k], proj[w]), _mul(proj[w], module.x[k]))

    # crossings move idempotents; distant crossings commute
    for k in range(m - 1):
        for w in extended:
            check("crossing-idempotent", (k + 1, w),
                  _mul(module.tau[k], proj[w]),
                  _mul(proj[_sigma(w, k)], module.tau[k]))
        for l in range(k + 2, m - 1):
            check("distant-crossings", (k + 1, l + 1),
                  _mul(module.tau[k], module.tau[l]),
                  _mul(module.tau[l], module.tau[k]))

    # quadratic relation
    for k in range(m - 1):
        for w in support:
            q = q_table.evaluate(w[k], w[k + 1], module.x[k], module.x[k + 1])
            check("quadratic", (k + 1, w),
                  _mul(_mul(module.tau[k], module.tau[k]), proj[w]),
                  _mul(q, proj[w]))

    # dot-crossing relation
    for k in range(m - 1):
        for l in range(m):
            sl = k + 1 if l == k else (k if l == k + 1 else l)
            for w in support:
                lhs = _mul(_sub(_mul(module.tau[k], module.x[l]),
                                _mul(module.x[sl], module.tau[k])), proj[w])
                if w[k] == w[k + 1] and l == k:
                    rhs = _scale(Fraction(-1), proj[w])
                elif w[k] == w[k + 1] and l == k + 1:
                    rhs = proj[w]
                else:
                    rhs = _zeros(dim)
                check("dot-crossing", (k + 1, l + 1, w), lhs, rhs)

    # braid relation
    for k in range(m - 2):
        for w in support:
            lhs = _mul(_sub(_mul(_mul(module.tau[k + 1], module.tau[k]),
                                 module.tau[k + 1]),
                            _mul(_mul(module.tau[k], module.tau[k + 1]),
                                 module.tau[k])), proj[w])
            rhs = _zeros(dim)
            if w[k] == w[k + 2] != w[k + 1]:
                for (p, q), c in q_table.poly(w[k], w[k + 1]).items():
                    xq = _pow(module.x[k + 1], q)
                    for r in range(p):
                        term = _mul(_mul(_pow(module.x[k + 2], r),
                                         _pow(module.x[k], p - 1 - r)), xq)
                        rhs = _add(rhs, _scale(c, term))
                rhs = _mul(rhs, proj[w])
            check("braid", (k + 1, w), lhs, rhs)

    return report


def report_failures(report: list[dict]) -> list[dict]:
    return [r for r in report if r["status"] == "fail"]


def check_degrees(module: MatrixModule) -> list[dict]:
    """Verify grading: nonzero entries shift degree by the operator degree."""
    bad = []
    datum = module.datum
    for name, mats, op_deg in (
            ("dot", module.x,
             lambda w, l: datum.bilinear(w[l], w[l])),
            ("crossing", module.tau,
             lambda w, k: -datum.bilinear(w[k], w[k + 1]))):
        for l, mat in enumerate(mats):
            for r in range(module.dim):
                for c in range(module.dim):
                    if mat[r][c] == 0:
                        continue
                    want = module.degrees[c] + op_deg(module.words[c], l)
                    if module.degrees[r] != want:
                        bad.append({"operator": name, "index": l + 1,
                                    "from": module.labels[c],
                                    "to": module.labels[r]})
    return bad


# ---------------------------------------------------------------------------
# Graded characters


def module_qcharacter(module: MatrixModule) -> dict[tuple[int, ...],
                                                    dict[int, int]]:
    """Per-sequence graded dimensions: word -> {degree: multiplicity}."""
    out: dict[tuple[int, ...], dict[int, int]] = {}
    for w, deg in zip(module.words, module.degrees):
        out.setdefault(w, {})
        out[w][deg] = out[w].get(deg, 0) + 1
    return out


def qcharacter_at_one(module: MatrixModule) -> dict[tuple[int, ...], int]:
    """Ungraded specialization: word -> total multiplicity."""
    return {w: sum(d.values()) for w, d in module_qcharacter(module).items()}
