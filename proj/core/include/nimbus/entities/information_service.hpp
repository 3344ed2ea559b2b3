#pragma once

#include <vector>

#include "nimbus/kernel/simulation.hpp"

namespace nimbus {

/// Registry of resource providers. Datacenters register on start; brokers
/// query it for the provider list, returned in registration order.
class CloudInformationService final : public Entity {
public:
    CloudInformationService() : Entity("cis") {}

    void process(const Event& ev) override;

    const std::vector<EntityId>& providers() const { return providers_; }

    /// Appends dc unless already present (a duplicate is reported, not added).
    void register_datacenter(EntityId dc);

private:
    std::vector<EntityId> providers_;
};

}  // namespace nimbus
