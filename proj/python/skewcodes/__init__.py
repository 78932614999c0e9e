# Copyright 2026 The skewcodes Authors
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
"""Skew polynomial rings F_q[X; θ, δ] and skew generalized cyclic codes."""

from ._core import (
    Field,
    Ring,
    SkewcodesError,
    SkewPoly,
    code,
    invariant_factorization,
    lclm,
    left_divide,
    lgcd,
    mds_search,
    right_divide,
    right_divisors,
    run_cli,
)

__all__ = [
    "Field",
    "Ring",
    "SkewPoly",
    "SkewcodesError",
    "code",
    "invariant_factorization",
    "lclm",
    "left_divide",
    "lgcd",
    "mds_search",
    "right_divide",
    "right_divisors",
    "run_cli",
    "run_json",
]


def run_json(*args):
    """Run a CLI command with --format json and return the parsed document."""
    import json

    rc, out, err = run_cli([*map(str, args), "--format", "json"])
    if rc != 0:
        raise SkewcodesError(f"exit {rc}: {err.strip()}")
    return json.loads(out)
