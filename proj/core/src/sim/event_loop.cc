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

#include "iotgw/sim/event_loop.h"

#include "iotgw/model/error.h"

namespace iotgw::sim {

std::string LogEntry::ToString() const {
  return std::to_string(tick) + ',' + source + ',' + event;
}

void EventLog::Add(Ticks tick, std::string source, std::string event) {
  if (!entries_.empty() && tick < entries_.back().tick) {
    throw Error(ErrorCode::kInvalidArgument,
                "log tick " + std::to_string(tick) + " precedes " +
                    std::to_string(entries_.back().tick));
  }
  // Keep one entry per line.
  for (char& c : event) {
    if (c == '\n') c = ' ';
  }
  entries_.push_back({tick, std::move(source), std::move(event)});
}

std::string EventLog::ToText() const {
  std::string out;
  for (const LogEntry& e : entries_) {
    out += e.ToString();
    out += '\n';
  }
  return out;
}

void EventLoop::At(Ticks when, std::string source, std::function<void()> fn) {
  queue_.push({std::max(when, now_), seq_++, std::move(source), std::move(fn)});
}

bool EventLoop::Step() {
  if (queue_.empty()) return false;
  Event event = queue_.top();
  queue_.pop();
  now_ = event.tick;
  event.fn();
  if (after_step_) after_step_();
  return true;
}

std::size_t EventLoop::RunUntilIdle() {
  std::size_t n = 0;
  while (Step()) ++n;
  return n;
}

std::size_t EventLoop::RunUntil(Ticks until) {
  std::size_t n = 0;
  while (!queue_.empty() && queue_.top().tick <= until) {
    Step();
    ++n;
  }
  now_ = std::max(now_, until);
  return n;
}

}  // namespace iotgw::sim
