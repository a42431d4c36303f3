# Copyright 2026 The gpqubit Authors
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
"""Geometric phase of a qubit coupled to a squeezed thermal bath."""

from ._gpqubit import (
    Bath,
    apply_kraus,
    dissipative_interaction_state,
    dissipative_state,
    dissipative_trajectory,
    excited_sign_change_time,
    gamma_qnd,
    gp_dissipative,
    gp_qnd,
    gp_trajectory,
    gp_unitary_mixed,
    initial_state,
    phase_damping_kraus,
    qnd_state,
    qnd_trajectory,
    sgad_channel,
    unitary_gp,
    wrap_phase,
)

__all__ = [
    "Bath",
    "apply_kraus",
    "dissipative_interaction_state",
    "dissipative_state",
    "dissipative_trajectory",
    "excited_sign_change_time",
    "gamma_qnd",
    "gp_dissipative",
    "gp_qnd",
    "gp_trajectory",
    "gp_unitary_mixed",
    "initial_state",
    "phase_damping_kraus",
    "qnd_state",
    "qnd_trajectory",
    "sgad_channel",
    "unitary_gp",
    "wrap_phase",
]
