// Copyright 2026 The iotgw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IOTGW_MODEL_SCHEDULER_H_
#define IOTGW_MODEL_SCHEDULER_H_

#include <functional>
#include <string>

#include "iotgw/model/kinds.h"

namespace iotgw {

// Simulated time costs shared by every module.
struct Costs {
  Ticks hop_delay = 10;    // d: one network or overlay hop
  Ticks per_record = 5;    // p: VNF processing per record
  Ticks join = 50;         // c_join: one overlay registration at the master
  Ticks retry_after = 100; // advertised in service-unavailable notifications

  friend bool operator==(const Costs&, const Costs&) = default;
};

// Where modules post future work. The simulator's event loop implements it.
class Scheduler {
 public:
  virtual ~Scheduler() = default;
  virtual Ticks now() const = 0;
  // Runs `fn` at `when` (clamped to now). Equal ticks run in posting order.
  virtual void At(Ticks when, std::string source, std::function<void()> fn) = 0;
  void After(Ticks delay, std::string source, std::function<void()> fn) {
    At(now() + delay, std::move(source), std::move(fn));
  }
};

}  // namespace iotgw

#endif  // IOTGW_MODEL_SCHEDULER_H_
