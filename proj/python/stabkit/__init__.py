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

"""Clifford-restricted circuit sampling and the stabilizer bootstrap."""

from ._core import (  # noqa: F401
    AnsatzSpec,
    BootstrapConfig,
    BootstrapResult,
    ChainVariant,
    Circuit,
    Dataset,
    DyadicProbability,
    Entanglement,
    ExponentFit,
    ForestParams,
    Gate,
    GateKind,
    ObservableKind,
    OutcomeCounts,
    PauliString,
    Phase,
    ScanPoint,
    StabilizerTableau,
    StateVector,
    Trace,
    TraceMetrics,
    TraceRecord,
    ValidationStats,
    __version__,
    angle_count,
    binomial_stderr,
    build_ansatz_circuit,
    commutes,
    compose,
    conjugate_gate,
    encode_features,
    exact_counts,
    expectation_dense,
    expectation_heisenberg,
    expectation_tableau,
    expected_improvement,
    fit_exponent,
    generate_classification,
    mc_counts,
    mse_loss,
    multiply,
    run_bootstrap,
    scan,
    set_threads,
    simulate_dense,
    tableau_from_circuit,
    theory_probability,
    trace_metrics,
    validate_oracle_agreement,
)
