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

#ifndef IOTGW_VNF_MANAGER_H_
#define IOTGW_VNF_MANAGER_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iotgw/model/types.h"
#include "iotgw/vnf/instance.h"
#include "iotgw/vnf/store.h"

namespace iotgw::vnf {

// Index of live (non-terminated) instances by kind and by host.
class VnfCatalogue {
 public:
  void Add(const VnfInstance& instance);
  void Remove(const std::string& instance_id);
  void Update(const VnfInstance& instance);

  // Lowest-id live instance of `kind`; with `config`, only an instance whose
  // configuration equals it.
  std::optional<VnfInstance> Find(const VnfKind& kind,
                                  const VnfConfig* config = nullptr) const;
  std::vector<VnfInstance> ByKind(const VnfKind& kind) const;
  std::vector<VnfInstance> ByHost(const std::string& host) const;
  std::optional<VnfInstance> Get(const std::string& instance_id) const;
  std::vector<VnfInstance> All() const;
  std::size_t size() const { return live_.size(); }

 private:
  std::map<std::string, VnfInstance> live_;
};

struct LifecycleOp {
  enum class Kind { kInstantiate, kTerminate } kind;
  std::string instance_id;
  VnfKind vnf_kind;
  std::string host;
};

// VNF lifecycle: instantiation on capable hosts, capacity accounting,
// termination. Owns the catalogue.
class VnfManager {
 public:
  explicit VnfManager(const std::vector<DeviceDescriptor>& devices = {});

  void AddHost(const DeviceDescriptor& device);

  // Instance is Active on return. Throws kUnknownHost, kHostNotCapable
  // (class A), kHostFull.
  VnfInstance Instantiate(const VnfPackage& package, const std::string& host,
                          VnfConfig config = {});
  // Throws kUnknownInstance if absent or already terminated.
  void Terminate(const std::string& instance_id);
  void Reconfigure(const std::string& instance_id, VnfConfig config);

  std::optional<VnfInstance> CatalogueCheck(const VnfKind& kind,
                                            const VnfConfig* config = nullptr) const {
    return catalogue_.Find(kind, config);
  }
  const VnfCatalogue& catalogue() const { return catalogue_; }
  // Includes terminated instances.
  std::optional<VnfInstance> Instance(const std::string& instance_id) const;
  bool IsLive(const std::string& instance_id) const;

  int FreeCapacity(const std::string& host) const;
  int TotalCapacity(const std::string& host) const;
  std::vector<std::string> hosts() const;
  const std::vector<LifecycleOp>& log() const { return log_; }

 private:
  struct HostSlots {
    DeviceDescriptor device;
    int used = 0;
  };
  std::map<std::string, HostSlots> hosts_;
  std::map<std::string, VnfInstance> instances_;
  std::map<std::string, int> next_serial_;
  VnfCatalogue catalogue_;
  std::vector<LifecycleOp> log_;
};

}  // namespace iotgw::vnf

#endif  // IOTGW_VNF_MANAGER_H_
