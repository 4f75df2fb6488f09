# Copyright 2026 The WOGLI Generator Authors.
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
"""German word-order NLI challenge set generator (C++ core)."""

from ._core import (
    PairRecord,
    WogliError,
    analyze,
    derive_os_hard,
    generate,
    is_ambiguous,
    patterns,
    read_pairs,
    sample_augmentation,
    two_proportion_ztest,
    validate_lexicon,
    write_pairs,
)

__all__ = [
    "PairRecord",
    "WogliError",
    "analyze",
    "derive_os_hard",
    "generate",
    "is_ambiguous",
    "patterns",
    "read_pairs",
    "sample_augmentation",
    "two_proportion_ztest",
    "validate_lexicon",
    "write_pairs",
]
