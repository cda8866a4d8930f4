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

#include "iotgw/vnf/manager.h"

#include <cmath>

#include "iotgw/model/error.h"

namespace iotgw::vnf {

std::string_view Name(VnfState state) {
  switch (state) {
    case VnfState::kInstantiated: return "Instantiated";
    case VnfState::kActive: return "Active";
    case VnfState::kTerminated: return "Terminated";
  }
  return "?";
}

void VnfCatalogue::Add(const VnfInstance& instance) {
  live_.insert_or_assign(instance.instance_id, instance);
}

void VnfCatalogue::Remove(const std::string& instance_id) {
  live_.erase(instance_id);
}

void VnfCatalogue::Update(const VnfInstance& instance) {
  auto it = live_.find(instance.instance_id);
  if (it != live_.end()) it->second = instance;
}

std::optional<VnfInstance> VnfCatalogue::Find(const VnfKind& kind,
                                              const VnfConfig* config) const {
  for (const auto& [id, instance] : live_) {
    if (instance.kind != kind) continue;
    if (config != nullptr && instance.config != *config) continue;
    return instance;
  }
  return std::nullopt;
}

std::vector<VnfInstance> VnfCatalogue::ByKind(const VnfKind& kind) const {
  std::vector<VnfInstance> out;
  for (const auto& [id, instance] : live_) {
    if (instance.kind == kind) out.push_back(instance);
  }
  return out;
}

std::vector<VnfInstance> VnfCatalogue::ByHost(const std::string& host) const {
  std::vector<VnfInstance> out;
  for (const auto& [id, instance] : live_) {
    if (instance.host == host) out.push_back(instance);
  }
  return out;
}

std::optional<VnfInstance> VnfCatalogue::Get(const std::string& instance_id) const {
  auto it = live_.find(instance_id);
  if (it == live_.end()) return std::nullopt;
  return it->second;
}

std::vector<VnfInstance> VnfCatalogue::All() const {
  std::vector<VnfInstance> out;
  for (const auto& [id, instance] : live_) out.push_back(instance);
  return out;
}

VnfManager::VnfManager(const std::vector<DeviceDescriptor>& devices) {
  for (const DeviceDescriptor& d : devices) AddHost(d);
}

void VnfManager::AddHost(const DeviceDescriptor& device) {
  hosts_.insert_or_assign(device.id, HostSlots{device, 0});
}

namespace {

void CheckConfig(const VnfKind& kind, const VnfConfig& config) {
  if (const auto* da = std::get_if<DaConfig>(&config)) {
    if (kind.type != VnfType::kDA) {
      throw Error(ErrorCode::kInvalidArgument, "aggregator config on " + kind.ToString());
    }
    if (da->window < 1) {
      throw Error(ErrorCode::kInvalidArgument, "aggregation window must be >= 1");
    }
    if (!std::isfinite(da->threshold)) {
      throw Error(ErrorCode::kInvalidArgument, "aggregation threshold must be finite");
    }
  }
  if (std::holds_alternative<LbConfig>(config) && kind.type != VnfType::kLB) {
    throw Error(ErrorCode::kInvalidArgument, "balancer config on " + kind.ToString());
  }
}

}  // namespace

VnfInstance VnfManager::Instantiate(const VnfPackage& package,
                                    const std::string& host, VnfConfig config) {
  auto it = hosts_.find(host);
  if (it == hosts_.end()) throw Error(ErrorCode::kUnknownHost, host);
  HostSlots& slots = it->second;
  if (slots.device.device_class == DeviceClass::kA) {
    throw Error(ErrorCode::kHostNotCapable, host + " is a class-A device");
  }
  if (slots.used >= slots.device.capabilities.host_capacity) {
    throw Error(ErrorCode::kHostFull, host);
  }
  CheckConfig(package.kind, config);

  std::string kind_name = package.kind.ToString();
  int serial = ++next_serial_[kind_name];
  VnfInstance instance{kind_name + "-" + std::to_string(serial), package.kind,
                       host, VnfState::kInstantiated, std::move(config)};
  ++slots.used;
  instance.state = VnfState::kActive;
  instances_.insert_or_assign(instance.instance_id, instance);
  catalogue_.Add(instance);
  log_.push_back({LifecycleOp::Kind::kInstantiate, instance.instance_id,
                  instance.kind, host});
  return instance;
}

void VnfManager::Terminate(const std::string& instance_id) {
  auto it = instances_.find(instance_id);
  if (it == instances_.end() || it->second.state == VnfState::kTerminated) {
    throw Error(ErrorCode::kUnknownInstance, instance_id);
  }
  it->second.state = VnfState::kTerminated;
  --hosts_.at(it->second.host).used;
  catalogue_.Remove(instance_id);
  log_.push_back({LifecycleOp::Kind::kTerminate, instance_id, it->second.kind,
                  it->second.host});
}

void VnfManager::Reconfigure(const std::string& instance_id, VnfConfig config) {
  auto it = instances_.find(instance_id);
  if (it == instances_.end() || it->second.state == VnfState::kTerminated) {
    throw Error(ErrorCode::kUnknownInstance, instance_id);
  }
  CheckConfig(it->second.kind, config);
  it->second.config = std::move(config);
  catalogue_.Update(it->second);
}

std::optional<VnfInstance> VnfManager::Instance(const std::string& instance_id) const {
  auto it = instances_.find(instance_id);
  if (it == instances_.end()) return std::nullopt;
  return it->second;
}

bool VnfManager::IsLive(const std::string& instance_id) const {
  auto it = instances_.find(instance_id);
  return it != instances_.end() && it->second.state != VnfState::kTerminated;
}

int VnfManager::FreeCapacity(const std::string& host) const {
  auto it = hosts_.find(host);
  if (it == hosts_.end()) throw Error(ErrorCode::kUnknownHost, host);
  return it->second.device.capabilities.host_capacity - it->second.used;
}

int VnfManager::TotalCapacity(const std::string& host) const {
  auto it = hosts_.find(host);
  if (it == hosts_.end()) throw Error(ErrorCode::kUnknownHost, host);
  return it->second.device.capabilities.host_capacity;
}

std::vector<std::string> VnfManager::hosts() const {
  std::vector<std::string> out;
  for (const auto& [id, slots] : hosts_) out.push_back(id);
  return out;
}

}  // namespace iotgw::vnf
