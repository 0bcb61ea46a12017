# Copyright 2026 The gbts Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
import pathlib

import numpy as np
import pytest
import scipy.linalg

import gbts

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def five_by_five():
    a = np.zeros((5, 5))
    for i, v in enumerate([2, 3, 7, 11]):
        a[i, i + 1] = a[i + 1, i] = v
    a[2, 2], a[4, 4] = 5, 13
    return a


def test_lhaf_engines():
    a = five_by_five()
    for engine in ["auto", "brute", "banded", "banded-rep"]:
        assert gbts.lhaf(a, engine=engine) == 292
    assert gbts.lhaf(np.zeros((0, 0))) == 1
    assert gbts.lhaf(np.ones((4, 4))) == gbts.telephone(4) == 10
    assert gbts.bandwidth(a) == 1


def test_lhaf_reps_and_loops():
    rng = np.random.default_rng(0)
    b = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    b = b + b.T
    reps = [2, 0, 1, 1]
    loops = rng.normal(size=4) + 1j * rng.normal(size=4)
    expanded = np.repeat(np.repeat(b, reps, axis=0), reps, axis=1)
    np.fill_diagonal(expanded, np.repeat(loops, reps))
    want = gbts.lhaf(expanded, engine="brute")
    for engine in ["auto", "banded", "banded-rep"]:
        got = gbts.lhaf(b, reps=reps, engine=engine, loops=list(loops))
        assert abs(got - want) <= 1e-10 * (1 + abs(want))


def test_errors():
    with pytest.raises(gbts.PreconditionError):
        gbts.lhaf(np.array([[0, 1], [2, 0]]))
    with pytest.raises(gbts.PreconditionError):
        gbts.lhaf(five_by_five(), engine="banded", bandwidth=0)
    with pytest.raises(gbts.ParseError):
        gbts.Circuit.from_json("{")
    with pytest.raises(gbts.PreconditionError):
        gbts.Circuit(2, eta=0.0)
    assert issubclass(gbts.ParseError, gbts.Error)


def test_circuit_round_trip():
    c = gbts.Circuit.load(str(FIXTURES / "lossy_chain.json"))
    assert c.modes == 4 and c.depth == 2 and c.eta == 0.8
    assert c.layers[1][1].mode1 == 1  # 0-based
    back = gbts.Circuit.from_json(c.to_json())
    assert np.allclose(gbts.unitary(back), gbts.unitary(c))
    u = gbts.unitary(c)
    assert np.allclose(u.conj().T @ u, np.eye(4))


def test_squeezed_vacuum():
    for r in [0.2, 0.5, 1.0]:
        c = gbts.Circuit(1, squeezing=[(r, 0.0)])
        assert gbts.prob(c, [0]) == pytest.approx(1 / math.cosh(r), abs=1e-12)
        assert gbts.prob(c, [2]) == pytest.approx(math.tanh(r) ** 2 / (2 * math.cosh(r)), abs=1e-12)
        assert gbts.prob(c, [1]) == pytest.approx(0, abs=1e-12)


def test_fock_space_oracle():
    # D(beta) S(r) |0> built by matrix exponentials in a truncated Fock space.
    cut = 60
    a = np.diag(np.sqrt(np.arange(1, cut)), 1)
    ad = a.conj().T
    r, phase, beta = 0.4, 0.7, 0.6 - 0.3j
    e = np.exp(1j * phase)
    s = scipy.linalg.expm(0.5 * r * (e * ad @ ad - np.conj(e) * a @ a))
    d = scipy.linalg.expm(beta * ad - np.conj(beta) * a)
    psi = d @ s[:, 0]
    c = gbts.Circuit(1, squeezing=[(r, phase)], displacement=[beta])
    for n in range(8):
        assert gbts.prob(c, [n]) == pytest.approx(abs(psi[n]) ** 2, abs=1e-10)


def test_adjacency_blocks():
    c = gbts.Circuit.load(str(FIXTURES / "lossy_chain.json"))
    A, gamma, prefactor = gbts.adjacency(c)
    assert A.shape == (8, 8) and len(gamma) == 8
    assert np.allclose(A, A.T)
    assert 0 < prefactor <= 1
    A2, _, _ = gbts.adjacency(c, k=2)
    assert A2.shape == (4, 4)


def test_sampling():
    c = gbts.Circuit(
        2,
        squeezing=[(0.5, 0.0), (0.5, math.pi)],
        layers=[[gbts.Beamsplitter(0, math.pi / 4)]],
    )
    samples = gbts.sample(c, c=2, n=500, seed=3)
    assert samples == gbts.sample(c, c=2, n=500, seed=3, threads=3)
    for s in samples:
        # Two-mode squeezed light: equal counts, or overflow.
        assert s is None or s[0] == s[1]
    sampler = gbts.Sampler(c, c=2, seed=3)
    assert sampler.sample(7)[0] == samples[7]
    assert sampler.sample(7)[1] <= 2 * 2
    q = sampler.conditional(1, [], 1.0)
    assert len(q) == 4 and sum(q) == pytest.approx(1.0)
    # Each half of the pair is thermal: p(0) = 1 / cosh^2 r.
    assert q[0] == pytest.approx(1 / math.cosh(0.5) ** 2, abs=1e-12)


def test_vacuum_samples():
    c = gbts.Circuit.load(str(FIXTURES / "vacuum.json"))
    assert gbts.sample(c, c=1, n=3) == [[0, 0, 0]] * 3
