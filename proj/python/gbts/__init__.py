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

"""Loop hafnians and exact threshold sampling of Gaussian states.

Modes are 0-based throughout the Python interface. Circuit JSON files keep
their 1-based mode numbers; Circuit.load and Circuit.from_json convert.
"""

from ._gbts import (
    Beamsplitter,
    Circuit,
    Error,
    ParseError,
    PhaseShift,
    PreconditionError,
    Sampler,
    UnphysicalStateError,
    adjacency,
    bandwidth,
    lhaf,
    prob,
    sample,
    telephone,
    unitary,
)

__version__ = "0.1.0"

__all__ = [
    "Beamsplitter",
    "Circuit",
    "Error",
    "ParseError",
    "PhaseShift",
    "PreconditionError",
    "Sampler",
    "UnphysicalStateError",
    "adjacency",
    "bandwidth",
    "lhaf",
    "prob",
    "sample",
    "telephone",
    "unitary",
]
