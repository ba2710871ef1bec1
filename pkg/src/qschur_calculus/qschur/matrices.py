"""Matrix model of S_q(n,d) acting on tensor space V^{(x)d}."""

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cache
from itertools import product

from ..errors import DomainError, ValidationError
from ..scalars import ONE, ZERO, LaurentQ
from ..weights import Weight, enumerate_lambda, in_lambda, shift

Letter = tuple[int, int]  # (colour, +1 for E_{+i} / -1 for E_{-i})
Dense = tuple[tuple[LaurentQ, ...], ...]
BlockKey = tuple[Weight, Weight]  # (target, source)


def _content(seq: tuple[int, ...], n: int) -> Weight:
    return tuple(seq.count(a) for a in range(1, n + 1))


@dataclass(frozen=True)
class TensorBasis:
    """Basis sequences of V^{(x)d} grouped by weight."""

    n: int
    d: int

    @property
    def sequences(self) -> list[tuple[int, ...]]:
        return list(product(range(1, self.n + 1), repeat=self.d))

    @property
    def weight_spaces(self) -> dict[Weight, list[tuple[int, ...]]]:
        return _weight_spaces(self.n, self.d)

    def index(self, seq: tuple[int, ...]) -> int:
        return self.weight_spaces[_content(seq, self.n)].index(seq)

    def dim(self, lam: Weight) -> int:
        return len(self.weight_spaces.get(lam, []))


@cache
def _weight_spaces(n: int, d: int) -> dict[Weight, list[tuple[int, ...]]]:
    spaces: dict[Weight, list[tuple[int, ...]]] = {
        lam: [] for lam in enumerate_lambda(n, d)
    }
    for seq in product(range(1, n + 1), repeat=d):
        spaces[_content(seq, n)].append(seq)
    return spaces


def _dense_zero(rows: int, cols: int) -> list[list[LaurentQ]]:
    return [[ZERO] * cols for _ in range(rows)]


def _freeze(rows: list[list[LaurentQ]]) -> Dense:
    return tuple(tuple(r) for r in rows)


def _dense_mul(a: Dense, b: Dense) -> Dense:
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = _dense_zero(len(a), cols)
    for r, row in enumerate(a):
        for k in range(inner):
            coeff = row[k]
            if not coeff:
                continue
            for c, val in enumerate(b[k]):
                if val:
                    out[r][c] = out[r][c] + coeff * val
    return _freeze(out)


def _dense_is_zero(a: Dense) -> bool:
    return all(not v for row in a for v in row)


@dataclass(frozen=True)
class BlockMatrix:
    """
    An operator on V^{(x)d} stored weight block by weight block.

    Missing blocks are zero; an instance with no blocks is the explicit zero
    used for words that leave Lambda(n,d).
    """

    n: int
    d: int
    blocks: dict[BlockKey, Dense] = field(default_factory=dict)

    def __post_init__(self) -> None:
        basis = TensorBasis(self.n, self.d)
        for (target, source), block in self.blocks.items():
            if not (in_lambda(target, self.n, self.d) and in_lambda(source, self.n, self.d)):
                raise ValidationError(f"block ({target}, {source}) outside Lambda")
            if len(block) != basis.dim(target) or any(
                len(row) != basis.dim(source) for row in block
            ):
                raise ValidationError(f"block ({target}, {source}) has the wrong shape")

    @classmethod
    def zero(cls, n: int, d: int) -> "BlockMatrix":
        return cls(n, d, {})

    @classmethod
    def idempotent(cls, lam: Weight, n: int, d: int) -> "BlockMatrix":
        size = TensorBasis(n, d).dim(lam)
        rows = _dense_zero(size, size)
        for k in range(size):
            rows[k][k] = ONE
        return cls(n, d, {(lam, lam): _freeze(rows)})

    @classmethod
    def identity(cls, n: int, d: int) -> "BlockMatrix":
        result = cls.zero(n, d)
        for lam in enumerate_lambda(n, d):
            result = result + cls.idempotent(lam, n, d)
        return result

    def _check_same_space(self, other: "BlockMatrix") -> None:
        if (self.n, self.d) != (other.n, other.d):
            raise ValidationError("block matrices over different tensor spaces")

    def __matmul__(self, other: "BlockMatrix") -> "BlockMatrix":
        self._check_same_space(other)
        out: dict[BlockKey, Dense] = {}
        for (target, middle), a in self.blocks.items():
            for (middle2, source), b in other.blocks.items():
                if middle != middle2:
                    continue
                prod = _dense_mul(a, b)
                key = (target, source)
                out[key] = _dense_add(out[key], prod) if key in out else prod
        return BlockMatrix(self.n, self.d, _prune(out))

    def __add__(self, other: "BlockMatrix") -> "BlockMatrix":
        self._check_same_space(other)
        out = dict(self.blocks)
        for key, block in other.blocks.items():
            out[key] = _dense_add(out[key], block) if key in out else block
        return BlockMatrix(self.n, self.d, _prune(out))

    def scale(self, c: LaurentQ | int) -> "BlockMatrix":
        c = LaurentQ.coerce(c)
        out = {
            key: tuple(tuple(c * v for v in row) for row in block)
            for key, block in self.blocks.items()
        }
        return BlockMatrix(self.n, self.d, _prune(out))

    def __neg__(self) -> "BlockMatrix":
        return self.scale(-1)

    def __sub__(self, other: "BlockMatrix") -> "BlockMatrix":
        return self + (-other)

    def is_zero(self) -> bool:
        return all(_dense_is_zero(b) for b in self.blocks.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        return (self.n, self.d) == (other.n, other.d) and (self - other).is_zero()

    def __hash__(self) -> int:
        return hash((self.n, self.d, frozenset(_prune(dict(self.blocks)))))

    def block(self, target: Weight, source: Weight) -> Dense:
        basis = TensorBasis(self.n, self.d)
        if (target, source) in self.blocks:
            return self.blocks[(target, source)]
        return _freeze(_dense_zero(basis.dim(target), basis.dim(source)))

    def restrict(self, source: Weight) -> "BlockMatrix":
        return BlockMatrix(
            self.n, self.d, {k: v for k, v in self.blocks.items() if k[1] == source}
        )

    def rank_bound(self) -> int:
        """Number of non-zero columns; an upper bound for the rank."""
        return sum(
            1
            for block in self.blocks.values()
            for c in range(len(block[0]) if block else 0)
            if any(row[c] for row in block)
        )


def _dense_add(a: Dense, b: Dense) -> Dense:
    return tuple(tuple(x + y for x, y in zip(ra, rb, strict=True)) for ra, rb in zip(a, b, strict=True))


def _prune(blocks: dict[BlockKey, Dense]) -> dict[BlockKey, Dense]:
    return {k: v for k, v in blocks.items() if not _dense_is_zero(v)}


def _check_colour(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise DomainError(f"colour {i} outside 1..{n - 1}")


@cache
def generator_matrix(i: int, sign: int, n: int, d: int) -> BlockMatrix:
    """
    Matrix of E_{+i} (sign=+1) or E_{-i} (sign=-1) on V^{(x)d}.

    Coproduct: E acts on one factor with K_i K_{i+1}^{-1} on the factors to its
    right; F acts on one factor with K_i^{-1} K_{i+1} on the factors to its left.
    """
    _check_colour(i, n)
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    basis = TensorBasis(n, d)
    spaces = basis.weight_spaces
    blocks: dict[BlockKey, list[list[LaurentQ]]] = {}
    old, new = (i + 1, i) if sign == 1 else (i, i + 1)
    for source, seqs in spaces.items():
        target = shift(source, i, sign)
        if not in_lambda(target, n, d):
            continue
        rows = _dense_zero(len(spaces[target]), len(seqs))
        for col, seq in enumerate(seqs):
            for k, letter in enumerate(seq):
                if letter != old:
                    continue
                if sign == 1:
                    others = seq[k + 1 :]
                    exponent = others.count(i) - others.count(i + 1)
                else:
                    others = seq[:k]
                    exponent = -(others.count(i) - others.count(i + 1))
                image = seq[:k] + (new,) + seq[k + 1 :]
                row = spaces[target].index(image)
                rows[row][col] = rows[row][col] + LaurentQ.q_power(exponent)
        blocks[(target, source)] = rows
    return BlockMatrix(n, d, _prune({k: _freeze(v) for k, v in blocks.items()}))


def cartan_k_matrix(i: int, n: int, d: int) -> BlockMatrix:
    """K_i, acting on the lambda block by q^{lambda_i}."""
    result = BlockMatrix.zero(n, d)
    for lam in enumerate_lambda(n, d):
        result = result + BlockMatrix.idempotent(lam, n, d).scale(
            LaurentQ.q_power(lam[i - 1])
        )
    return result


@cache
def hecke_generator(i: int, d: int, n: int) -> BlockMatrix:
    """
    T_i acting on factors i, i+1 of V^{(x)d}.

    v_a v_a -> q^2 v_a v_a; for a < b, v_a v_b -> q v_b v_a and
    v_b v_a -> q v_a v_b + (q^2 - 1) v_b v_a.
    """
    if not 1 <= i <= d - 1:
        raise DomainError(f"Hecke generator T_{i} needs 1 <= i <= {d - 1}")
    q = LaurentQ.q_power(1)
    q2 = LaurentQ.q_power(2)
    blocks: dict[BlockKey, Dense] = {}
    for lam, seqs in TensorBasis(n, d).weight_spaces.items():
        rows = _dense_zero(len(seqs), len(seqs))
        for col, seq in enumerate(seqs):
            a, b = seq[i - 1], seq[i]
            swapped = seq[: i - 1] + (b, a) + seq[i + 1 :]
            if a == b:
                rows[col][col] = q2
            elif a < b:
                rows[seqs.index(swapped)][col] = q
            else:
                rows[seqs.index(swapped)][col] = q
                rows[col][col] = q2 - 1
        blocks[(lam, lam)] = _freeze(rows)
    return BlockMatrix(n, d, _prune(blocks))


@dataclass(frozen=True)
class AlgebraWord:
    """
    scalar * E_{a_1} ... E_{a_k} 1_source, letters written left to right.

    The rightmost letter acts first.
    """

    letters: tuple[Letter, ...]
    source: Weight
    scalar: LaurentQ = ONE

    @classmethod
    def of(cls, source: Iterable[int], *letters: Letter, scalar: LaurentQ | int = 1) -> "AlgebraWord":
        return cls(tuple(letters), tuple(source), LaurentQ.coerce(scalar))

    def weights(self) -> list[Weight]:
        """Weights from the source outwards, one per letter boundary."""
        current = self.source
        out = [current]
        for colour, sign in reversed(self.letters):
            current = shift(current, colour, sign)
            out.append(current)
        return out

    @property
    def target(self) -> Weight:
        return self.weights()[-1]

    def is_zero_by_label(self, n: int, d: int) -> bool:
        return not self.scalar or any(not in_lambda(w, n, d) for w in self.weights())

    def then(self, other: "AlgebraWord") -> "AlgebraWord":
        """other * self: apply self first, then other (other.source must match)."""
        if other.source != self.target:
            raise ValidationError(
                f"cannot compose: target {self.target} differs from source {other.source}"
            )
        return AlgebraWord(other.letters + self.letters, self.source, self.scalar * other.scalar)

    def scaled(self, c: LaurentQ | int) -> "AlgebraWord":
        return AlgebraWord(self.letters, self.source, self.scalar * LaurentQ.coerce(c))

    def __str__(self) -> str:
        body = "".join(
            f"E{'+' if s == 1 else '-'}{c}" for c, s in self.letters
        )
        prefix = "" if self.scalar == ONE else f"({self.scalar})"
        return f"{prefix}{body}1_{self.source}"


def word_matrix(w: AlgebraWord, n: int, d: int) -> BlockMatrix:
    """Product of generator matrices applied to the source block."""
    if not in_lambda(w.source, n, d) or w.is_zero_by_label(n, d):
        return BlockMatrix.zero(n, d)
    result = BlockMatrix.idempotent(w.source, n, d)
    for colour, sign in reversed(w.letters):
        result = generator_matrix(colour, sign, n, d) @ result
    return result.scale(w.scalar)


def combination_matrix(terms: Iterable[AlgebraWord], n: int, d: int) -> BlockMatrix:
    result = BlockMatrix.zero(n, d)
    for term in terms:
        result = result + word_matrix(term, n, d)
    return result
