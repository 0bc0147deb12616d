#pragma once

#include <string>

#include "insplan/oracle.hpp"

namespace insplan {

// Saliency oracle backed by an HTTP service. Each assessment POSTs
//   {"poi":{"name","relation","aabb":{"min","max"}},"position":[x,y,z]}
// to <base_url>/assess and expects
//   {"visible":bool,"saliency":number,"relation_ok":bool}.
// Transport failures (unreachable, non-200) are retried twice with
// exponential backoff before becoming TransportError; malformed bodies or a
// saliency outside [0,1] are ProtocolError immediately — never clamped.
class RemoteOracle final : public SaliencyOracle {
  public:
    explicit RemoteOracle(std::string base_url, int backoff_ms = 100);
    SaliencyVerdict assess(const Vec3& position, const Poi& poi) override;

  private:
    std::string host_;
    int port_ = 80;
    int backoff_ms_;
};

}  // namespace insplan
