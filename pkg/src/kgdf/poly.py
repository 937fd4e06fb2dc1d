"""Exact polynomial arithmetic.

Scalars are ``int``, ``Fraction`` or :class:`GaussianRational`; a Gaussian
rational with zero imaginary part is always demoted to its real part, so a
coefficient is "real" exactly when it is not a ``GaussianRational``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Tuple, Union

Scalar = Union[int, Fraction, "GaussianRational"]


class GaussianRational:
    """``re + im*i`` with rational parts. Construct through :func:`gauss`."""

    __slots__ = ("re", "im")

    def __init__(self, re_part, im_part):
        self.re = Fraction(re_part)
        self.im = Fraction(im_part)

    @staticmethod
    def _parts(x):
        if isinstance(x, GaussianRational):
            return x.re, x.im
        if isinstance(x, (int, Fraction)):
            return x, 0
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return gauss(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return gauss(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return gauss(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        r, i = p
        return gauss(self.re * r - self.im * i, self.re * i + self.im * r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        r, i = p
        den = Fraction(r) * r + Fraction(i) * i
        if den == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return gauss((self.re * r + self.im * i) / den, (self.im * r - self.re * i) / den)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return inverse(self) * gauss(*p)

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.re == p[0] and self.im == p[1]

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return _scalar_str(self)


def gauss(re_part, im_part=0) -> Scalar:
    """Build a scalar; demotes to a real ``int``/``Fraction`` when ``im_part == 0``."""
    if im_part == 0:
        return _real(re_part)
    return GaussianRational(re_part, im_part)


I = GaussianRational(0, 1)


def _real(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def inverse(x: Scalar) -> Scalar:
    if isinstance(x, GaussianRational):
        den = x.re * x.re + x.im * x.im
        return gauss(x.re / den, -x.im / den)
    if x == 0:
        raise ZeroDivisionError("zero has no inverse")
    return _real(Fraction(1) / Fraction(x))


def is_real(x: Scalar) -> bool:
    return not isinstance(x, GaussianRational)


def real_part(x: Scalar):
    return x.re if isinstance(x, GaussianRational) else x


def imag_part(x: Scalar):
    return x.im if isinstance(x, GaussianRational) else 0


def _frac_pair(x) -> list:
    f = Fraction(x)
    return [f.numerator, f.denominator]


def _frac_str(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _scalar_str(x: Scalar) -> str:
    if is_real(x):
        return _frac_str(x)
    r, i = x.re, x.im
    im = "i" if i == 1 else "-i" if i == -1 else f"{_frac_str(i)}i"
    if r == 0:
        return im
    return f"({_frac_str(r)}{'' if im.startswith('-') else '+'}{im})"


# --------------------------------------------------------------------------
# Laurent polynomials
# --------------------------------------------------------------------------

class _Laurent:
    """Finitely supported map exponent-tuple -> scalar with no stored zeros."""

    VARS: Tuple[str, ...] = ()
    __slots__ = ("terms",)

    def __init__(self, terms: Dict[tuple, Scalar] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, c: Scalar = 1):
        return cls({(0,) * len(cls.VARS): c})

    @classmethod
    def monomial(cls, c: Scalar, *exps: int):
        if len(exps) != len(cls.VARS):
            raise ValueError(f"expected {len(cls.VARS)} exponents")
        return cls({tuple(exps): c})

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            if other == 0:
                return self._raw({})
            return self._raw({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, type(self)):
            return NotImplemented
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(x + y for x, y in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return self._raw({k: v for k, v in out.items() if v != 0})

    __rmul__ = __mul__

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self):
        """Inverse of a monomial; anything else raises ``ValueError``."""
        if not self.is_monomial():
            raise ValueError(f"{self} is not invertible")
        (k, v), = self.terms.items()
        return self._raw({tuple(-x for x in k): inverse(v)})

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((k, hash(v)) for k, v in self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def coefficient(self, *exps: int) -> Scalar:
        return self.terms.get(tuple(exps), 0)

    def is_real(self) -> bool:
        return all(is_real(v) for v in self.terms.values())

    def is_integral(self) -> bool:
        return all(is_real(v) and Fraction(v).denominator == 1 for v in self.terms.values())

    # rendering ------------------------------------------------------------

    def _sort_key(self, exps):
        return exps

    def _monomial_str(self, exps) -> str:
        parts = []
        for name, e in zip(self.VARS, exps):
            if e == 1:
                parts.append(name)
            elif e != 0:
                parts.append(f"{name}^{e}")
        return " ".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for exps in sorted(self.terms, key=self._sort_key):
            c = self.terms[exps]
            mono = self._monomial_str(exps)
            neg = is_real(c) and c < 0
            mag = -c if neg else c
            if mono and mag == 1:
                body = mono
            else:
                cs = _scalar_str(mag)
                body = cs + (" " if mono and "/" in cs else "") + mono
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"

    @classmethod
    def parse(cls, text: str):
        """Parse the human-readable rendering, e.g. ``"2a^2 - a^4 + a^5 z"``.

        Accepts integer or ``p/q`` coefficients, ``^-k`` exponents, and the
        unicode minus sign; Gaussian coefficients are not accepted.
        """
        text = text.replace("−", "-").strip()
        if text in ("", "0"):
            return cls()
        tokens = re.findall(r"[+-]|[^+\-]+", re.sub(r"\^\s*-", "^~", text))
        result = cls()
        sign = 1
        for tok in tokens:
            tok = tok.strip()
            if not tok:
                continue
            if tok in "+-":
                sign = sign * (-1 if tok == "-" else 1)
                continue
            result = result + cls._parse_term(tok.replace("~", "-"), sign)
            sign = 1
        return result

    @classmethod
    def _parse_term(cls, tok: str, sign: int):
        m = re.match(r"^(\d+(?:/\d+)?)?\s*(.*)$", tok)
        coeff = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        exps = [0] * len(cls.VARS)
        for name, exp in re.findall(r"([A-Za-z])(?:\^(-?\d+))?", m.group(2)):
            if name not in cls.VARS:
                raise ValueError(f"unknown variable {name!r} in {tok!r}")
            exps[cls.VARS.index(name)] += int(exp) if exp else 1
        leftover = re.sub(r"([A-Za-z])(?:\^(-?\d+))?", "", m.group(2)).strip()
        if leftover:
            raise ValueError(f"malformed term {tok!r}")
        return cls({tuple(exps): _real(sign * coeff)})


class LaurentPoly2(_Laurent):
    """Laurent polynomial in ``a`` and ``z``; keys are ``(aExp, zExp)``."""

    VARS = ("a", "z")
    __slots__ = ()

    def min_z(self) -> int:
        return min((k[1] for k in self.terms), default=0)

    def evaluate_a1(self) -> "LaurentPoly2":
        """Set ``a = 1``; the result only involves ``z``."""
        out: dict = {}
        for (_, zexp), c in self.terms.items():
            out[(0, zexp)] = out.get((0, zexp), 0) + c
        return LaurentPoly2(out)

    def to_json(self) -> list:
        rows = []
        for (ae, ze), c in sorted(self.terms.items()):
            rows.append({"aExp": ae, "zExp": ze,
                         "re": _frac_pair(real_part(c)), "im": _frac_pair(imag_part(c))})
        return rows

    @classmethod
    def from_json(cls, rows: Iterable[dict]) -> "LaurentPoly2":
        terms = {}
        for r in rows:
            terms[(r["aExp"], r["zExp"])] = gauss(Fraction(*r["re"]), Fraction(*r["im"]))
        return cls(terms)


class LaurentPoly1(_Laurent):
    """Laurent polynomial in ``s``; keys are 1-tuples ``(sExp,)``."""

    VARS = ("s",)
    __slots__ = ()

    def to_json(self) -> list:
        return [{"sExp": k[0], "re": _frac_pair(real_part(c)), "im": _frac_pair(imag_part(c))}
                for k, c in sorted(self.terms.items())]


A = LaurentPoly2.monomial(1, 1, 0)
A_INV = LaurentPoly2.monomial(1, -1, 0)
Z = LaurentPoly2.monomial(1, 0, 1)
ONE = LaurentPoly2.const(1)
#: extra-circle factor of the Dubrovnik theory, (a - 1/a)/z + 1
D = LaurentPoly2({(1, -1): 1, (-1, -1): -1, (0, 0): 1})
#: extra-circle factor of HOMFLY-PT, (a - 1/a)/z
DELTA = LaurentPoly2({(1, -1): 1, (-1, -1): -1})

S = LaurentPoly1.monomial(1, 1)


def a_power(k: int) -> LaurentPoly2:
    return LaurentPoly2._raw({(k, 0): 1})


# --------------------------------------------------------------------------
# Truncated power series in (h, z)
# --------------------------------------------------------------------------

class TruncatedSeries2:
    """Power series in ``h`` and ``z`` truncated above total degree ``cutoff``."""

    __slots__ = ("cutoff", "terms")

    def __init__(self, cutoff: int, terms: Dict[Tuple[int, int], Scalar] | None = None):
        if cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        self.cutoff = cutoff
        self.terms = {}
        for (h, z), c in (terms or {}).items():
            if h < 0 or z < 0:
                raise ValueError("series exponents must be nonnegative")
            if h + z <= cutoff and c != 0:
                self.terms[(h, z)] = c

    @classmethod
    def _raw(cls, cutoff, terms):
        obj = cls.__new__(cls)
        obj.cutoff = cutoff
        obj.terms = terms
        return obj

    def _check(self, other: "TruncatedSeries2"):
        if other.cutoff != self.cutoff:
            raise ValueError(f"cutoff mismatch: {self.cutoff} vs {other.cutoff}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = TruncatedSeries2(self.cutoff, {(0, 0): other})
        if not isinstance(other, TruncatedSeries2):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        return self._raw(self.cutoff, out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self.cutoff, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            if other == 0:
                return self._raw(self.cutoff, {})
            return self._raw(self.cutoff, {k: v * other for k, v in self.terms.items()})
        if not isinstance(other, TruncatedSeries2):
            return NotImplemented
        self._check(other)
        n = self.cutoff
        out: dict = {}
        for (h1, z1), v1 in self.terms.items():
            for (h2, z2), v2 in other.terms.items():
                if h1 + h2 + z1 + z2 <= n:
                    k = (h1 + h2, z1 + z2)
                    out[k] = out.get(k, 0) + v1 * v2
        return self._raw(n, {k: v for k, v in out.items() if v != 0})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers of a series are not supported")
        result = TruncatedSeries2(self.cutoff, {(0, 0): 1})
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries2):
            return NotImplemented
        return self.cutoff == other.cutoff and self.terms == other.terms

    def coefficient(self, h: int, z: int = 0) -> Scalar:
        if h + z > self.cutoff:
            raise ValueError(f"h^{h} z^{z} lies beyond the cutoff {self.cutoff}")
        return self.terms.get((h, z), 0)

    def min_degree(self) -> int | None:
        return min((h + z for h, z in self.terms), default=None)

    def __repr__(self):
        body = ", ".join(f"h^{h}z^{z}: {_scalar_str(c)}" for (h, z), c in sorted(self.terms.items()))
        return f"TruncatedSeries2(N={self.cutoff}, {{{body}}})"


def exp_series(k: Scalar, cutoff: int) -> TruncatedSeries2:
    """Series of ``exp(k h)`` up to ``h^cutoff``."""
    terms = {}
    power = Fraction(1)
    for j in range(cutoff + 1):
        terms[(j, 0)] = _real(power / factorial(j)) if is_real(power) else power * Fraction(1, factorial(j))
        power = power * k
    return TruncatedSeries2(cutoff, terms)


def substitute_exponential(p: LaurentPoly2, cutoff: int = 5) -> TruncatedSeries2:
    """Expand ``p(e^h, z)`` as a power series in ``h`` and ``z``.

    Raises ``ValueError`` on a nonreal coefficient or a negative power of ``z``.
    """
    out: dict = {}
    for (ae, ze), c in p.terms.items():
        if not is_real(c):
            raise ValueError(f"nonreal coefficient {c} at a^{ae} z^{ze}")
        if ze < 0:
            raise ValueError(f"negative z exponent in a^{ae} z^{ze}")
        if ze > cutoff:
            continue
        term = Fraction(c)
        for j in range(cutoff - ze + 1):
            if j:
                term = term * ae / j
            if term == 0:
                break
            key = (j, ze)
            out[key] = out.get(key, 0) + term
    return TruncatedSeries2(cutoff, {k: _real(v) for k, v in out.items()})


def substitute_monomial(p: LaurentPoly2, a_image: LaurentPoly1, z_image: LaurentPoly1) -> LaurentPoly1:
    """Formal substitution ``a -> a_image``, ``z -> z_image``.

    ``a_image`` must be a monomial when ``p`` has negative powers of ``a``;
    negative powers of ``z`` are rejected.
    """
    a_inv = None
    if any(ae < 0 for ae, _ in p.terms):
        if not a_image.is_monomial():
            raise ValueError("a-image is not invertible but p has negative powers of a")
        a_inv = a_image.inverse()
    a_cache: dict = {0: LaurentPoly1.const(1)}
    z_cache: dict = {0: LaurentPoly1.const(1)}

    def a_pow(k):
        if k not in a_cache:
            a_cache[k] = (a_image if k > 0 else a_inv) ** abs(k)
        return a_cache[k]

    def z_pow(k):
        if k < 0:
            raise ValueError("negative z exponent cannot be substituted")
        if k not in z_cache:
            z_cache[k] = z_image ** k
        return z_cache[k]

    result = LaurentPoly1()
    for (ae, ze), c in p.terms.items():
        result = result + a_pow(ae) * z_pow(ze) * c
    return result


def laurent1_to_series(q: LaurentPoly1, unit: Scalar, cutoff: int) -> TruncatedSeries2:
    """Series in ``h`` of ``q(unit * e^h)`` (``z`` exponent always 0)."""
    out = TruncatedSeries2(cutoff)
    for (k,), c in q.terms.items():
        factor = c * scalar_power(unit, k)
        out = out + exp_series(k, cutoff) * factor
    return out


def scalar_power(x: Scalar, k: int) -> Scalar:
    if k < 0:
        return scalar_power(inverse(x), -k)
    result: Scalar = 1
    for _ in range(k):
        result = result * x
    return result


def substitute_series(p: LaurentPoly2, a_series: TruncatedSeries2, a_inv_series: TruncatedSeries2,
                      z_series: TruncatedSeries2) -> TruncatedSeries2:
    """Univariate substitution of series for ``a``, ``1/a`` and ``z`` into ``p``."""
    n = a_series.cutoff
    a_cache = {0: TruncatedSeries2(n, {(0, 0): 1})}
    z_cache = {0: TruncatedSeries2(n, {(0, 0): 1})}

    def a_pow(k):
        if k not in a_cache:
            a_cache[k] = (a_series if k > 0 else a_inv_series) ** abs(k)
        return a_cache[k]

    def z_pow(k):
        if k < 0:
            raise ValueError("negative z exponent cannot be substituted")
        if k not in z_cache:
            z_cache[k] = z_series ** k
        return z_cache[k]

    out = TruncatedSeries2(n)
    for (ae, ze), c in p.terms.items():
        out = out + a_pow(ae) * z_pow(ze) * c
    return out
