# Copyright 2026 The szilard Authors
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

import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("SZILARD_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="SZILARD_CLI not set")


def run(*args, env=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


def test_fig3_csv():
    out = run("fig3", "--eta-min", "0", "--eta-max", "0.6", "--eta-steps", "2")
    assert out.returncode == 0
    rows = list(csv.DictReader(io.StringIO(out.stdout)))
    assert float(rows[1]["dw_m2"]) == pytest.approx(0.32, abs=1e-12)


def test_map_json_and_boundary():
    out = run("fig4-map", "--family", "werner", "--eta-min", "0", "--eta-max", "0", "--eta-steps", "1",
              "--q-steps", "3", "--format", "json")
    assert out.returncode == 0
    rows = json.loads(out.stdout)
    assert [r["q"] for r in rows] == [0.0, 0.5, 1.0]
    out = run("fig4-map", "--boundary", "--eta-min", "0", "--eta-max", "0", "--eta-steps", "1")
    assert float(out.stdout.splitlines()[1].split(",")[1]) == pytest.approx(3 ** -0.5, abs=1e-9)


def test_scatter_summary_on_stderr():
    out = run("fig4-scatter", "--eta-steps", "5", "--q-steps", "5")
    assert out.returncode == 0
    assert "# rank_correlation=" in out.stderr


def test_exact_output_is_deterministic(tmp_path):
    a = run("sweep", "--eta-steps", "4", "--q-steps", "3", "--threads", "1")
    b = run("sweep", "--eta-steps", "4", "--q-steps", "3", "--threads", "4")
    assert a.stdout == b.stdout


def test_config_file_and_override(tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("eta-min=0.2\neta-max=0.2\neta-steps=1\nformat=json\n")
    out = run("fig3", "--config", str(cfg))
    assert json.loads(out.stdout)[0]["eta"] == 0.2
    env = dict(os.environ, SZILARD_CONFIG=str(cfg))
    out = run("fig3", "--format", "csv", env=env)
    assert out.stdout.startswith("eta,dw_m1,dw_m2\n0.2,")


def test_out_file(tmp_path):
    path = tmp_path / "bound.csv"
    out = run("bound", "--eta", "0.5", "--c1", "1", "--c2", "0", "--c3", "0", "--resolution", "2000",
              "--out", str(path))
    assert out.returncode == 0
    assert path.read_text().startswith("eta,c1,c2,c3,closed,oracle")


def test_exit_codes():
    assert run("fig3", "--eta-min", "-2").returncode == 2
    assert run("bound", "--c1", "0.5").returncode == 2
    assert run("nonsense").returncode == 2
    assert run("sample", "--shots", "1").returncode == 2
    assert run("--help").returncode == 0
