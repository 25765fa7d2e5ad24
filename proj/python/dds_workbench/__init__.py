# Copyright 2026 The DDS Workbench Authors
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

"""Distribution-adaptive shot allocation workbench.

Thin wrapper over the native core. Graphs and training logs come back as
plain dicts in the same layout the command-line tool writes.
"""

import json
import os

from . import _core
from ._core import arg_metric, default_k, entropy, hellinger, next_shots, required_shots

__all__ = [
    "arg_metric",
    "default_k",
    "entropy",
    "generate_graph",
    "hellinger",
    "max_cut",
    "next_shots",
    "required_shots",
    "train",
]


def generate_graph(model, n_nodes, seed):
    return json.loads(_core.generate_graph_json(model, n_nodes, seed))


def max_cut(graph):
    """Returns (best_value, maximizers) for a graph dict."""
    return _core.max_cut(json.dumps(graph))


def train(config, base_dir="."):
    """Trains every (policy, seed) pair of a run configuration dict."""
    return [json.loads(s) for s in _core.train_json(json.dumps(config), os.fspath(base_dir))]
