/*
 * Copyright 2026 The skewcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace skewcodes::acceptance {

/// Counts checks and keeps the first few failure messages.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (messages_.size() < 8) messages_.push_back(what);
    }
    void instance() { ++instances_; }
    void exhaustive() { ++exhaustive_; }
    std::size_t checks() const { return checks_; }
    std::size_t failures() const { return failures_; }
    std::size_t instances() const { return instances_; }
    std::size_t exhaustive_cases() const { return exhaustive_; }
    const std::vector<std::string>& messages() const { return messages_; }
    bool ok() const { return failures_ == 0; }

private:
    std::size_t checks_ = 0, failures_ = 0, instances_ = 0, exhaustive_ = 0;
    std::vector<std::string> messages_;
};

struct Outcome {
    bool pass = false;
    std::string summary;
    std::vector<std::string> notes;  // printed indented under the verdict
};

/// Randomized suites need this many instances on top of their exhaustive part.
inline constexpr std::size_t kMinInstances = 1000;

inline Outcome from_tally(const Tally& t, const std::string& what) {
    Outcome o;
    std::ostringstream s;
    s << what << ": " << t.instances() << " random + " << t.exhaustive_cases() << " exhaustive cases, " << t.checks()
      << " checks, " << t.failures() << " failures";
    o.summary = s.str();
    o.pass = t.ok() && t.instances() >= kMinInstances;
    if (t.instances() < kMinInstances) o.notes.push_back("too few random instances");
    o.notes.insert(o.notes.end(), t.messages().begin(), t.messages().end());
    return o;
}


Outcome criterion_mds_table();
Outcome criterion_f8_census();
Outcome criterion_f4_decomposition();
Outcome criterion_f7_counterexample();

Outcome suite_ring_laws();
Outcome suite_invariance();
Outcome suite_kernel_codes();
Outcome suite_idempotents();
Outcome suite_duals();
Outcome suite_minimal_poly();
Outcome suite_bound_soundness();
Outcome suite_commutative_oracle();

}  // namespace skewcodes::acceptance
