#!/usr/bin/env python
# encoding: utf-8
"""
symbolic

Shift spaces over finite alphabets of integer symbols: subshifts of finite
type given by a boolean transition matrix and countable-graph shifts
truncated at a bound M. Regions are finite unions of cylinders
(`CylinderSet`); points are eventually periodic sequences
(`SymbolSequence`).

The metric is d(x, y) = 2^-j with j the first index where x and y differ.
"""

from fractions import Fraction
import logging
import math

import numpy as np
from scipy import linalg
from scipy.sparse.csgraph import connected_components

from .exceptions import (SymbolOutOfAlphabet,
                         WordNotAllowed,
                         TooLarge,
                         BadRadius)
from .utils import as_fraction

ENUMERATION_CAP = 2 ** 22


class ShiftSpace(object):
    """Base class of the shift spaces.

    Subclasses provide `alphabet` (a sorted tuple of ints) and the
    successor table `_successors` (symbol -> sorted tuple of symbols).
    """

    kind = None

    def __init__(self, alphabet, successors, name=None):
        self.alphabet = tuple(sorted(int(s) for s in alphabet))
        self._index = {s: i for i, s in enumerate(self.alphabet)}
        self._successors = {int(s): tuple(sorted(int(t) for t in succ))
                            for s, succ in successors.items()}
        self.name = name

        for s in self.alphabet:
            succ = self._successors.get(s, ())
            if not succ:
                raise ValueError('symbol {} has no successor'.format(s))
            for t in succ:
                if t not in self._index:
                    raise SymbolOutOfAlphabet(t)

    def __repr__(self):
        return '{}({}, {} symbols)'.format(type(self).__name__,
                                          self.name or '', len(self.alphabet))

    def __eq__(self, other):
        if not isinstance(other, ShiftSpace):
            return NotImplemented
        return (self.kind == other.kind and self.alphabet == other.alphabet and
                self._successors == other._successors)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.kind, self.alphabet))

    def check_symbol(self, s):
        if s not in self._index:
            raise SymbolOutOfAlphabet(s)
        return s

    def successors(self, s):
        return self._successors[self.check_symbol(s)]

    def children(self, word):
        """Symbols that may follow `word` (the whole alphabet after the empty word)."""
        if not word:
            return self.alphabet
        return self._successors[word[-1]]

    def is_allowed(self, word):
        word = tuple(word)
        for s in word:
            self.check_symbol(s)
        return all(t in self._successors[s] for s, t in zip(word[:-1], word[1:]))

    def check_word(self, word):
        word = tuple(int(s) for s in word)
        if not self.is_allowed(word):
            raise WordNotAllowed(word)
        return word

    @property
    def transition_matrix(self):
        """Boolean matrix A with A[i, j] true when alphabet[i] -> alphabet[j]."""
        A = np.zeros((len(self.alphabet), len(self.alphabet)), dtype=bool)
        for s, succ in self._successors.items():
            for t in succ:
                A[self._index[s], self._index[t]] = True
        return A

    def reachable(self, s, steps):
        """Symbols reachable from s in exactly `steps` transitions."""
        current = {self.check_symbol(s)}
        for _ in range(steps):
            current = {t for u in current for t in self._successors[u]}
        return current

    def reachable_layers(self, s, steps):
        """Reachable symbol sets after 0, 1, ..., steps transitions."""
        layers = [{self.check_symbol(s)}]
        for _ in range(steps):
            layers.append({t for u in layers[-1] for t in self._successors[u]})
        return layers

    def _backward_layers(self, end, steps):
        # layers[j]: symbols from which `end` is reachable in exactly j steps
        predecessors = {s: set() for s in self.alphabet}
        for s, succ in self._successors.items():
            for t in succ:
                predecessors[t].add(s)
        layers = [{end}]
        for _ in range(steps):
            layers.append({p for t in layers[-1] for p in predecessors[t]})
        return layers

    def bridge(self, start, end, steps):
        """Lexicographically smallest path start -> ... -> end of `steps` transitions.

        Returns the tuple of visited symbols (start and end included), or
        None when no such path exists.
        """
        if steps < 0:
            return None
        layers = self._backward_layers(end, steps)
        if start not in layers[steps]:
            return None
        path = [start]
        for remaining in range(steps - 1, -1, -1):
            path.append(min(t for t in self._successors[path[-1]]
                            if t in layers[remaining]))
        return tuple(path)

    def bridges(self, start, end, steps):
        """All paths start -> ... -> end of `steps` transitions, in lexicographic order."""
        layers = self._backward_layers(end, steps)
        if start not in layers[steps]:
            return []

        out = []

        def extend(path, remaining):
            if remaining == 0:
                out.append(tuple(path))
                return
            for t in self._successors[path[-1]]:
                if t in layers[remaining - 1]:
                    extend(path + [t], remaining - 1)

        extend([start], steps)
        return out

    def to_json(self):
        raise NotImplementedError('implement in subclass')


class SFT(ShiftSpace):
    """Subshift of finite type given by a square boolean transition matrix.

    Parameters
    ----------
    matrix : array-like
        A[i, j] nonzero when symbol i may be followed by symbol j.
    alphabet : list of int, optional
        Symbol labels, by default 0, ..., k-1.
    """

    kind = 'sft'

    def __init__(self, matrix, alphabet=None, name=None):
        matrix = np.asarray(matrix).astype(bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError('transition matrix should be square, '
                             'got shape {}'.format(matrix.shape))
        if alphabet is None:
            alphabet = range(matrix.shape[0])
        alphabet = [int(s) for s in alphabet]
        if len(alphabet) != matrix.shape[0] or alphabet != sorted(set(alphabet)):
            raise ValueError('alphabet should list {} increasing symbols'.format(
                matrix.shape[0]))

        successors = {s: [alphabet[j] for j in np.flatnonzero(matrix[i])]
                      for i, s in enumerate(alphabet)}
        super(SFT, self).__init__(alphabet, successors, name)

    def to_json(self):
        return {'kind': self.kind,
                'name': self.name,
                'alphabet': list(self.alphabet),
                'matrix': self.transition_matrix.astype(int).tolist()}


class GraphShift(ShiftSpace):
    """Shift of a countable graph, truncated to the symbols 0, ..., M.

    Parameters
    ----------
    successors : dict or callable
        Successor rule; a callable is evaluated on 0, ..., M and its
        values are cut to symbols <= M.
    truncation : int
        The bound M.
    """

    kind = 'graph'

    def __init__(self, successors, truncation, name=None):
        self.truncation = int(truncation)
        alphabet = range(self.truncation + 1)
        if callable(successors):
            successors = {s: successors(s) for s in alphabet}
        successors = {int(s): [t for t in succ if 0 <= int(t) <= self.truncation]
                      for s, succ in successors.items()}
        super(GraphShift, self).__init__(alphabet, successors, name)

    def to_json(self):
        return {'kind': self.kind,
                'name': self.name,
                'truncation': self.truncation,
                'successors': {str(s): list(succ) for s, succ in self._successors.items()}}


def shift_from_json(data):
    kind = data.get('kind')
    if kind == SFT.kind:
        return SFT(data['matrix'], data.get('alphabet'), data.get('name'))
    if kind == GraphShift.kind:
        return GraphShift({int(s): succ for s, succ in data['successors'].items()},
                          data['truncation'], data.get('name'))
    raise ValueError('unknown shift kind {!r}'.format(kind))


def full_shift(k=2):
    return SFT(np.ones((k, k), dtype=bool), name='full-{}'.format(k))


def golden_mean_shift():
    """Binary sequences without two consecutive 1's."""
    return SFT([[1, 1], [1, 0]], name='golden-mean')


def fixed_point_shift():
    """The one-point shift {0^inf}."""
    return SFT([[1]], name='fixed-point')


def sigma_graph(truncation=8):
    """The countable graph shift with 0 -> w for all w and v -> v-1, v otherwise.

    Truncated at `truncation`; the successors of 0 are 0, ..., M.
    """
    truncation = int(truncation)
    successors = {v: (range(truncation + 1) if v == 0 else [v - 1, v])
                  for v in range(truncation + 1)}
    return GraphShift(successors, truncation, name='sigma-graph')


def is_sigma_graph(space):
    return (isinstance(space, GraphShift) and
            space == sigma_graph(space.truncation))


def is_allowed(space, word):
    return space.is_allowed(word)


class SymbolSequence(object):
    """Eventually periodic sequence prefix + cycle + cycle + ...

    The representation is normalized: the cycle is primitive and the
    prefix does not end with the last symbol of the cycle.
    """

    __slots__ = ('prefix', 'cycle')

    def __init__(self, prefix=(), cycle=(0,)):
        prefix = tuple(int(s) for s in prefix)
        cycle = tuple(int(s) for s in cycle)
        if not cycle:
            raise ValueError('cycle should be nonempty')

        for d in range(1, len(cycle) + 1):
            if len(cycle) % d == 0 and cycle == cycle[:d] * (len(cycle) // d):
                cycle = cycle[:d]
                break
        while prefix and prefix[-1] == cycle[-1]:
            prefix = prefix[:-1]
            cycle = cycle[-1:] + cycle[:-1]

        self.prefix = prefix
        self.cycle = cycle

    @classmethod
    def periodic(cls, word):
        return cls((), word)

    def __getitem__(self, i):
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def take(self, n, start=0):
        return tuple(self[i] for i in range(start, start + n))

    def shift(self, k=1):
        """sigma^k of the sequence."""
        if k <= len(self.prefix):
            return SymbolSequence(self.prefix[k:], self.cycle)
        offset = (k - len(self.prefix)) % len(self.cycle)
        return SymbolSequence((), self.cycle[offset:] + self.cycle[:offset])

    def period(self):
        """Least p with sigma^p(x) = x, or None when x is not periodic."""
        if self.prefix:
            return None
        return len(self.cycle)

    def is_allowed_in(self, space):
        return space.is_allowed(self.prefix + self.cycle + self.cycle[:1])

    def __eq__(self, other):
        if not isinstance(other, SymbolSequence):
            return NotImplemented
        return self.prefix == other.prefix and self.cycle == other.cycle

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.prefix, self.cycle))

    def __repr__(self):
        head = ' '.join(str(s) for s in self.prefix)
        tail = '({})^inf'.format(' '.join(str(s) for s in self.cycle))
        return 'SymbolSequence({})'.format((head + ' ' + tail).strip())

    def to_json(self):
        return {'prefix': list(self.prefix), 'cycle': list(self.cycle)}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, (list, tuple)):
            return cls((), data)
        return cls(data.get('prefix', ()), data['cycle'])

    @classmethod
    def minimal_extension(cls, space, word):
        """Extend an allowed word by smallest successors until it cycles."""
        seq = list(space.check_word(word)) or [space.alphabet[0]]
        seen = {}
        while seq[-1] not in seen:
            seen[seq[-1]] = len(seq) - 1
            seq.append(space.successors(seq[-1])[0])
        start = seen[seq[-1]]
        return cls(seq[:start], seq[start:-1])


def sequence_distance(x, y):
    """d(x, y) = 2^-j, j the first index where x and y differ."""
    horizon = (max(len(x.prefix), len(y.prefix)) +
               len(x.cycle) * len(y.cycle) // math.gcd(len(x.cycle), len(y.cycle)))
    for j in range(horizon):
        if x[j] != y[j]:
            return Fraction(1, 2 ** j)
    return Fraction(0)


def _is_prefix(u, w):
    return len(u) <= len(w) and w[:len(u)] == u


class CylinderSet(object):
    """Finite union of cylinders [w] = {x : x starts with w}.

    Canonical form: no word is a prefix of another, and a word whose
    allowed one-symbol extensions are all present replaces them. The whole
    space is the single empty word.
    """

    __slots__ = ('space', '_words')

    def __init__(self, space, words=()):
        self.space = space
        words = {space.check_word(w) for w in words}
        self._words = self._canonical(words)

    def _canonical(self, words):
        changed = True
        while changed:
            changed = False
            words = {w for w in words
                     if not any(w[:i] in words for i in range(len(w)))}
            parents = {}
            for w in words:
                if w:
                    parents.setdefault(w[:-1], set()).add(w[-1])
            for u, last in parents.items():
                if last >= set(self.space.children(u)):
                    words -= {u + (s,) for s in last}
                    words.add(u)
                    changed = True
        return tuple(sorted(words))

    @classmethod
    def whole(cls, space):
        return cls(space, [()])

    @classmethod
    def empty(cls, space):
        return cls(space, [])

    @classmethod
    def cylinder(cls, space, word):
        return cls(space, [word])

    @property
    def words(self):
        return self._words

    def __iter__(self):
        return iter(self._words)

    def __len__(self):
        return len(self._words)

    def __bool__(self):
        return len(self._words) > 0

    __nonzero__ = __bool__

    def __eq__(self, other):
        if not isinstance(other, CylinderSet):
            return NotImplemented
        return self._words == other._words and self.space == other.space

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._words)

    def __repr__(self):
        if not self._words:
            return 'CylinderSet(empty)'
        return 'CylinderSet({})'.format(' U '.join(
            '[{}]'.format(','.join(str(s) for s in w)) for w in self._words))

    def is_whole(self):
        return self._words == ((),)

    def max_length(self):
        return max((len(w) for w in self._words), default=0)

    def contains(self, x):
        """Membership of a SymbolSequence (or a long enough word)."""
        if isinstance(x, SymbolSequence):
            return any(x.take(len(w)) == w for w in self._words)
        x = tuple(x)
        return any(_is_prefix(w, x) for w in self._words)

    __contains__ = contains

    def union(self, other):
        return CylinderSet(self.space, self._words + other.words)

    def intersection(self, other):
        out = []
        for u in self._words:
            for v in other.words:
                if _is_prefix(u, v):
                    out.append(v)
                elif _is_prefix(v, u):
                    out.append(u)
        return CylinderSet(self.space, out)

    __or__ = union
    __and__ = intersection

    def _covered(self, word):
        # is [word] inside self
        if any(_is_prefix(v, word) for v in self._words):
            return True
        if not any(_is_prefix(word, v) for v in self._words):
            return False
        return all(self._covered(word + (s,)) for s in self.space.children(word))

    def issubset(self, other):
        return all(other._covered(w) for w in self._words)

    __le__ = issubset

    def image(self):
        """sigma of the set."""
        return CylinderSet(self.space, [v for w in self._words
                                        for v in cylinder_image(self.space, w, 1).words])

    def preimage(self):
        """sigma^-1 of the set."""
        out = []
        for w in self._words:
            if not w:
                return CylinderSet.whole(self.space)
            out.extend((s,) + w for s in self.space.alphabet
                       if w[0] in self.space.successors(s))
        return CylinderSet(self.space, out)

    def pull_back_within(self, target, steps, cap=ENUMERATION_CAP):
        """self intersected with sigma^-steps(target), enumerated exactly."""
        out = []
        for u in self._words:
            for v in target.words:
                out.extend(_join(self.space, u, v, steps))
                if len(out) > cap:
                    raise TooLarge(len(out), cap)
        return CylinderSet(self.space, out)

    def to_json(self):
        return [list(w) for w in self._words]

    @classmethod
    def from_json(cls, space, data):
        return cls(space, [tuple(w) for w in data])


def _join(space, u, v, k):
    # words of sequences that start with u and read v from index k
    if not v:
        return [u]
    if not u:
        if k == 0:
            return [v]
        return [w for s in space.alphabet for w in _join(space, (s,), v, k)]
    if k < len(u):
        overlap = min(len(u) - k, len(v))
        if u[k:k + overlap] != v[:overlap]:
            return []
        return [u + v[overlap:]]
    return [u + path[1:-1] + v
            for path in space.bridges(u[-1], v[0], k - len(u) + 1)]


def cylinder_image(space, word, k):
    """sigma^k([word]) as a canonical CylinderSet.

    Shifting drops the first k symbols; once the word is used up the
    image is the union of the cylinders of the symbols reachable from its
    last symbol.
    """
    word = space.check_word(word)
    if k < 0:
        raise ValueError('k should be nonnegative')
    if k < len(word):
        return CylinderSet(space, [word[k:]])
    if not word:
        return CylinderSet.whole(space)
    reach = space.reachable(word[-1], k - len(word) + 1)
    return CylinderSet(space, [(s,) for s in reach])


def cylinder_covering_index(space, word, max_k=None):
    """Least k with sigma^k([word]) the whole space, or None."""
    word = space.check_word(word)
    if max_k is None:
        max_k = len(word) + len(space.alphabet) ** 2
    for k in range(max_k + 1):
        if cylinder_image(space, word, k).is_whole():
            return k
    return None


def primitivity_index(space):
    """Least N with all entries of A^N positive, or None when A is not primitive.

    Powers are boolean; the search stops at the alphabet size squared,
    above Wielandt's bound.
    """
    A = space.transition_matrix
    n_components, _ = connected_components(A.astype(int), directed=True,
                                           connection='strong')
    if n_components > 1:
        return None

    power = A.copy()
    for N in range(1, len(space.alphabet) ** 2 + 1):
        if power.all():
            return N
        power = (power.astype(int) @ A.astype(int)) > 0
    return None


def word_count(space, length):
    """Number of allowed words of a given length (transfer matrix)."""
    if length == 0:
        return 1
    counts = np.ones(len(space.alphabet), dtype=object)
    A = space.transition_matrix.astype(int).astype(object)
    for _ in range(length - 1):
        counts = A.dot(counts)
    return int(counts.sum())


def words(space, n):
    """Allowed words of length n in lexicographic order."""
    out = [()]
    for _ in range(n):
        out = [w + (s,) for w in out for s in space.children(w)]
    return out


def _dyadic_exponent(eps):
    eps = as_fraction(eps)
    if eps <= 0 or eps > 1 or eps.numerator != 1 or \
            eps.denominator & (eps.denominator - 1):
        raise BadRadius(eps, 'eps should be a power of 1/2 in (0, 1]')
    return eps.denominator.bit_length() - 1


def separated_count(space, n, eps, cap=ENUMERATION_CAP, method='transfer'):
    """Maximal cardinality s(n, eps) of an (n, eps)-separated set.

    With eps = 2^-m two sequences are (n, eps)-separated exactly when they
    differ at an index below n + m, so s(n, eps) is the number of allowed
    words of length n + m (every allowed word extends to a sequence).

    Parameters
    ----------
    method : {'transfer', 'enumerate'}
        Count with the transfer matrix, or enumerate the words.

    Raises
    ------
    TooLarge
        When more than `cap` words would have to be considered.
    """
    if n < 1:
        raise ValueError('n should be at least 1')
    length = n + _dyadic_exponent(eps)
    size = word_count(space, length)
    if size > cap:
        raise TooLarge(size, cap)
    if size > cap // 2:
        logging.warning('counting {} words, close to the cap of {}'.format(size, cap))
    if method == 'enumerate':
        return len(words(space, length))
    return size


def entropy_estimate(space, n_max, eps, cap=ENUMERATION_CAP):
    """(1/n) log s(n, eps) at n = n_max, a finite-n estimate of the limsup."""
    return math.log(separated_count(space, n_max, eps, cap)) / n_max


def spectral_entropy(space):
    """log of the spectral radius of the transition matrix."""
    radius = np.max(np.abs(linalg.eigvals(space.transition_matrix.astype(float))))
    return float(np.log(radius))


class EntropyBoundCheck(object):
    """Outcome of `leo_entropy_bound_check`.

    Attributes
    ----------
    passed : bool
    covering : bool
        Whether sigma^N maps every eps-ball onto the space.
    counts : dict
        k -> s(kN, eps).
    failed_k : int or None
    """

    def __init__(self, passed, covering, counts, failed_k=None):
        self.passed = passed
        self.covering = covering
        self.counts = counts
        self.failed_k = failed_k

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def __repr__(self):
        if self.passed:
            return 'EntropyBoundCheck(pass)'
        if not self.covering:
            return 'EntropyBoundCheck(fail, not covering)'
        return 'EntropyBoundCheck(fail at k={})'.format(self.failed_k)


def leo_entropy_bound_check(space, N, eps, k_max, cap=ENUMERATION_CAP):
    """Check s(kN, eps) >= 2^k for k = 1, ..., k_max.

    The inequality is a consequence of sigma^N(B(x, eps)) being the whole
    space; that covering is checked first on every eps-ball (the cylinders
    of length m for eps = 2^-m).
    """
    m = _dyadic_exponent(eps)
    covering = all(cylinder_image(space, w, N).is_whole() for w in words(space, m))
    if not covering:
        logging.info('sigma^{} does not map every {}-ball onto {!r}'.format(N, eps, space))

    counts = {}
    for k in range(1, k_max + 1):
        counts[k] = separated_count(space, k * N, eps, cap)
        if counts[k] < 2 ** k:
            return EntropyBoundCheck(False, covering, counts, k)
    return EntropyBoundCheck(covering, covering, counts)


def periodic_closure(space, word):
    """Shortest allowed extension v of `word` with v[-1] -> v[0].

    v repeated forever is a periodic sequence through [word]; on the graph
    shift the loop descends to 0 and jumps back.
    """
    word = space.check_word(word)
    if not word:
        raise ValueError('word should be nonempty')
    for steps in range(1, len(space.alphabet) + 1):
        path = space.bridge(word[-1], word[0], steps)
        if path is not None:
            return word + path[1:-1]
    raise WordNotAllowed(word)
