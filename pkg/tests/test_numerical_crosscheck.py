"""Floating-point cross-check of the exact engine on the saturated-hook class.

Independent path: the relations are transcribed directly into complex
matrices at q = exp(-i pi / h), the quotient projector comes from an SVD,
and tensor states are projected on both factors.  This must agree with the
exact cyclotomic elimination on (a) the quotient dimension of the class,
(b) the vanishing of the first hook vector, (c) the non-vanishing of the
second one, and (d) nilpotency.
"""

from itertools import permutations

import numpy as np
import pytest

N_, H_ = 3, 4
Q = np.exp(-1j * np.pi / H_)


def qint(m):
    if m == 0:
        return 0j
    s = sum(Q ** (abs(m) - 1 - 2 * j) for j in range(abs(m)))
    return s if m > 0 else -s


def eps(a, b):
    return 1 if a > b else (-1 if a < b else 0)


def class_words(row_multiset):
    words = []
    for rs in sorted(set(permutations(row_multiset))):
        def fill(pos, cur):
            if pos == len(rs):
                words.append(tuple(cur))
                return
            for f in range(1, N_ + 1):
                fill(pos + 1, cur + [(rs[pos], f)])
        fill(0, [])
    return words


def relation_matrix(words):
    index = {w: i for i, w in enumerate(words)}
    rows = []
    for w in words:
        if w[-1][0] >= 2:
            vec = np.zeros(len(words), complex)
            vec[index[w]] = 1.0
            rows.append(vec)
        for p in range(len(w) - 1):
            (ji, ba), (ii, aa) = w[p], w[p + 1]
            cnt = [0] * N_
            for (r, _f) in w[p + 2:]:
                cnt[r - 1] += 1
            vec = np.zeros(len(words), complex)
            if ji != ii and ba != aa:
                pij = (ji - ii) + (cnt[ii - 1] - cnt[ji - 1])
                w2 = w[:p] + ((ii, aa), (ji, ba)) + w[p + 2:]
                w3 = w[:p] + ((ii, ba), (ji, aa)) + w[p + 2:]
                vec[index[w]] += qint(pij - 1)
                vec[index[w2]] += -qint(pij)
                vec[index[w3]] += Q ** (eps(aa, ba) * pij)
            elif ji != ii:
                w2 = w[:p] + ((ii, aa), (ji, ba)) + w[p + 2:]
                vec[index[w]] += 1
                vec[index[w2]] -= 1
            elif ba != aa:
                w2 = w[:p] + ((ii, aa), (ji, ba)) + w[p + 2:]
                vec[index[w]] += 1
                vec[index[w2]] -= Q ** eps(ba, aa)
            else:
                continue
            rows.append(vec)
    return np.array(rows), index


def quotient_projector(rows):
    _u, s, vt = np.linalg.svd(rows, full_matrices=False)
    rank = int((s > 1e-9 * s[0]).sum())
    right = vt[:rank]
    return np.eye(rows.shape[1]) - right.conj().T @ right, rank


def tensor_matrix(ops, index):
    states = {((), ()): 1.0 + 0j}
    for (i, j) in ops:
        out = {}
        for (cw, bw), c in states.items():
            for al in range(1, N_ + 1):
                key = (((i, al),) + cw, ((j, al),) + bw)
                out[key] = out.get(key, 0) + c
        states = out
    size = len(index)
    mat = np.zeros((size, size), complex)
    for (cw, bw), c in states.items():
        mat[index[cw], index[bw]] += c
    return mat


@pytest.fixture(scope="module")
def hook_class():
    words = class_words([1, 1, 1, 2])
    rows, index = relation_matrix(words)
    proj, rank = quotient_projector(rows)
    return words, index, proj, rank


def test_quotient_dimension_matches_exact_engine(hook_class, ctx31):
    words, _index, _proj, rank = hook_class
    exact = sum(
        ctx31.block_basis((3, 1, 0), fc).dim
        for fc in sorted({tuple(
            sum(1 for (_r, f) in w if f == t + 1) for t in range(N_))
            for w in words}))
    assert len(words) - rank == exact == 15


def test_hook_vectors_match_exact_engine(hook_class):
    _words, index, proj, _rank = hook_class
    v_img = proj @ tensor_matrix([(1, 1), (1, 1), (1, 1), (2, 2)], index) @ proj.T
    w_img = proj @ tensor_matrix([(1, 1), (1, 1), (2, 2), (1, 1)], index) @ proj.T
    assert np.abs(v_img).max() < 1e-10          # first hook vector dies
    assert np.abs(w_img).max() > 1e-3           # second one survives


def test_nilpotency_numerically():
    words = class_words([1, 1, 1, 1])
    rows, index = relation_matrix(words)
    # the h-th power rows join the exchange rows in this class
    extra = []
    for w in words:
        if len({w[p] for p in range(4)}) == 1:
            vec = np.zeros(len(words), complex)
            vec[index[w]] = 1.0
            extra.append(vec)
    rows = np.vstack([rows, extra])
    proj, _rank = quotient_projector(rows)
    img = proj @ tensor_matrix([(1, 1)] * 4, index) @ proj.T
    assert np.abs(img).max() < 1e-10
