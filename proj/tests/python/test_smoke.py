# Copyright 2026 The stabkit authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import stabkit as sk


def test_pauli_roundtrip():
    p = sk.PauliString.from_letters("ZZXX")
    assert str(p) == "+ZZXX"
    assert p == sk.PauliString.domain_wall(4, 0.5)
    assert p.is_hermitian()
    assert not sk.commutes(sk.PauliString.from_letters("X"), sk.PauliString.from_letters("Z"))


def test_single_qubit_base_case():
    z = sk.PauliString.from_letters("Z")
    expected = {0: 1, 1: 0, 2: -1, 3: 0}
    for k, value in expected.items():
        c = sk.Circuit(1)
        c.append(sk.Gate.ry_quarter(0, k))
        assert sk.expectation_heisenberg(c, z) == value


def test_exact_counts_match_theory():
    for n in range(1, 6):
        spec = sk.AnsatzSpec(n, 1, sk.Entanglement.REVERSE_LINEAR)
        counts = sk.exact_counts(spec, sk.PauliString.domain_wall(n, 0.0))
        assert counts.plus_one * 4 == counts.total
        assert counts.minus_one == counts.plus_one
        theory = sk.theory_probability(n, sk.ObservableKind.Z_STRING, sk.Entanglement.REVERSE_LINEAR)
        assert theory.value() == 0.25


def test_paths_agree():
    spec = sk.AnsatzSpec(5, 2, sk.Entanglement.LINEAR)
    angles = [1, 3, 0, 2, 1, 0, 3, 2, 1, 1]
    c = sk.build_ansatz_circuit(spec, angles)
    obs = sk.PauliString.domain_wall(5, 0.4)
    h = sk.expectation_heisenberg(c, obs)
    t = sk.expectation_tableau(sk.tableau_from_circuit(c), obs)
    d = sk.expectation_dense(sk.simulate_dense(c), obs)
    assert h == t
    assert abs(d - h) < 1e-9


def test_expected_improvement_degenerate_value():
    assert sk.expected_improvement(0.0, 1.0, 0.0) == pytest.approx(1.0 / math.sqrt(2.0 * math.pi), abs=1e-12)
    assert sk.expected_improvement(-1.0, 0.0, 0.0) == 0.0


def test_exponent_fit_endpoints():
    assert sk.fit_exponent(0.25, 8).nu == pytest.approx(0.0, abs=1e-14)
    n = 10
    fit = sk.fit_exponent(2.0 ** -(n / 2 + 1), n)
    assert fit.nu == pytest.approx((n / 2 - 1) * math.log(2) / math.log(n), abs=1e-12)


def test_mc_counts_deterministic():
    spec = sk.AnsatzSpec(12, 1, sk.Entanglement.REVERSE_LINEAR)
    obs = sk.PauliString.domain_wall(12, 0.0)
    a = sk.mc_counts(spec, obs, 5000, 11)
    b = sk.mc_counts(spec, obs, 5000, 11)
    assert (a.plus_one, a.minus_one, a.zero) == (b.plus_one, b.minus_one, b.zero)
    se = sk.binomial_stderr(a.p_plus(), a.total)
    assert abs(a.p_plus() - 0.25) < 4 * se


def test_bootstrap_round_trip():
    data = sk.generate_classification(20, 6, 1.0, 0.5, 3)
    assert data.n_samples == 20 and data.n_features == 6
    spec = sk.AnsatzSpec(6, 2, sk.Entanglement.REVERSE_LINEAR)
    obs = sk.PauliString.domain_wall(6, 0.0)
    cfg = sk.BootstrapConfig()
    cfg.sample_budget = 24
    cfg.opt_iterations = 4
    cfg.forest.n_trees = 16
    cfg.pool_size = 32
    cfg.mutation_count = 8
    cfg.seed = 5
    result = sk.run_bootstrap(cfg, spec, obs, data)
    metrics = sk.trace_metrics(result.trace)
    assert metrics.min_loss == result.best_loss
    assert len(result.trace.records) == 28
    best = result.trace.best_so_far()
    assert all(b2 <= b1 for b1, b2 in zip(best, best[1:]))
    assert result.best_loss <= sk.mse_loss([0] * sk.angle_count(spec), spec, obs, data) + 4.0


def test_oracle_validation_clean():
    stats = sk.validate_oracle_agreement(40, 6, 30, 17)
    assert stats.circuits == 40
    assert stats.ok()
