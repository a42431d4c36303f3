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

import math

import numpy as np
import pytest

import gpqubit as gq


def circle_distance(a, b):
    return abs(math.remainder(a - b, 2.0 * math.pi))


def test_unitary_limit():
    for theta in np.linspace(0.0, math.pi, 7):
        expect = -math.pi * (1.0 - math.cos(theta))
        assert circle_distance(gq.unitary_gp(theta), expect) < 1e-12
        assert circle_distance(gq.gp_dissipative(theta, 0.0, gq.Bath())["phase"], expect) < 1e-9


def test_initial_state_convention():
    rho = gq.initial_state(0.7, 1.9)
    assert rho.shape == (2, 2)
    assert abs(rho[0, 0] - math.cos(0.35) ** 2) < 1e-15
    assert abs(rho[0, 1] - 0.5 * math.sin(0.7) * np.exp(-1.9j)) < 1e-15


def test_phase_damping_matches_dephasing_state():
    bath = gq.Bath(gamma0=0.0025, temp=100.0, squeeze_r=0.4)
    rho0 = gq.initial_state(1.0, 0.3)
    via = gq.apply_kraus(rho0, gq.phase_damping_kraus(2.0, bath))
    assert np.max(np.abs(via - gq.qnd_state(2.0, 1.0, 0.3, bath))) < 1e-12


def test_sgad_reproduces_closed_form():
    bath = gq.Bath(gamma0=0.6, temp=5.0, squeeze_r=0.4, squeeze_phi=1.5)
    ch = gq.sgad_channel(0.15, bath)
    assert len(ch["kraus"]) == 4
    rho0 = gq.initial_state(1.2, 0.4)
    out = gq.apply_kraus(rho0, ch["kraus"])
    expect = gq.dissipative_interaction_state(0.15, 1.2, 0.4, bath)
    assert np.max(np.abs(out - expect)) < 1e-8


def test_closed_form_agrees_with_trajectory():
    bath = gq.Bath(gamma0=0.05, temp=2.0, squeeze_r=0.4)
    closed = gq.gp_dissipative(1.0, 0.0, bath)["phase"]
    times, states = gq.dissipative_trajectory(1.0, 0.0, bath, 1024)
    assert circle_distance(gq.gp_trajectory(times, states)["phase"], closed) < 1e-3
    times, states = gq.dissipative_trajectory(1.0, 0.0, bath, 1024, rk4=True)
    assert circle_distance(gq.gp_trajectory(times, states)["phase"], closed) < 1e-3


def test_dephasing_phase_at_equator():
    bath = gq.Bath(gamma0=0.0025, temp=100.0)
    res = gq.gp_qnd(math.pi / 2.0, bath, intervals=128)
    assert circle_distance(res["phase"], -math.pi) < 1e-3
    assert 0.0 < res["bloch_length_tau"] <= 1.0


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        gq.Bath(temp=-1.0)
    with pytest.raises(ValueError):
        gq.initial_state(4.0, 0.0)
    mixed = [np.diag([0.75, 0.25]).astype(complex)] * 4
    with pytest.raises(ValueError):
        gq.gp_trajectory([0.0, 0.1, 0.2, 0.3], mixed)
