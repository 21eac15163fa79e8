# SPDX-License-Identifier: Apache-2.0
#
# qtfa - finite-dimensional quantum time-frequency analysis
# Copyright (C) 2026 The qtfa authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

"""Finite quantum time-frequency analysis on Z_N (bindings to the C++ library)."""

import json as _json

from ._qtfa import *  # noqa: F401,F403
from ._qtfa import QtfaError, run_json

__all__ = [name for name in dir() if not name.startswith("_")]


def run_experiment(subcommand, **config):
    """Run a CLI subcommand in-process and return the report as a dict."""
    return _json.loads(run_json(subcommand, _json.dumps(config)))


def error_code(exc):
    """Error code name carried by a QtfaError."""
    if not isinstance(exc, QtfaError):
        return None
    return str(exc).split(":", 1)[0]
