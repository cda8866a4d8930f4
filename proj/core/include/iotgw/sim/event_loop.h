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

#ifndef IOTGW_SIM_EVENT_LOOP_H_
#define IOTGW_SIM_EVENT_LOOP_H_

#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "iotgw/model/scheduler.h"

namespace iotgw::sim {

struct LogEntry {
  Ticks tick = 0;
  std::string source;
  std::string event;

  // `tick,source,event`
  std::string ToString() const;
  friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

// Ordered record of everything that happened in a run.
class EventLog {
 public:
  // Throws kInvalidArgument if `tick` is earlier than the last entry.
  void Add(Ticks tick, std::string source, std::string event);
  const std::vector<LogEntry>& entries() const { return entries_; }
  std::string ToText() const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<LogEntry> entries_;
};

// Single-threaded discrete-event loop. Events at the same tick run in the
// order they were posted.
class EventLoop : public Scheduler {
 public:
  Ticks now() const override { return now_; }
  void At(Ticks when, std::string source, std::function<void()> fn) override;

  // Runs one event. Returns false when the queue is empty.
  bool Step();
  // Runs until nothing is queued. Returns the number of events run.
  std::size_t RunUntilIdle();
  // Runs every event scheduled at or before `until`, then advances to it.
  std::size_t RunUntil(Ticks until);
  bool idle() const { return queue_.empty(); }
  // Runs after every event, at that event's tick.
  void set_after_step(std::function<void()> fn) { after_step_ = std::move(fn); }
  std::size_t pending() const { return queue_.size(); }

 private:
  struct Event {
    Ticks tick;
    std::uint64_t seq;
    std::string source;
    std::function<void()> fn;
  };
  struct Later {
    bool operator()(const Event& a, const Event& b) const {
      return a.tick != b.tick ? a.tick > b.tick : a.seq > b.seq;
    }
  };

  Ticks now_ = 0;
  std::uint64_t seq_ = 0;
  std::function<void()> after_step_;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
};

}  // namespace iotgw::sim

#endif  // IOTGW_SIM_EVENT_LOOP_H_
