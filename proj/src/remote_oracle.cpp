#include "insplan/remote_oracle.hpp"

#include <chrono>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "insplan/errors.hpp"

namespace insplan {

using nlohmann::json;

RemoteOracle::RemoteOracle(std::string base_url, int backoff_ms)
    : backoff_ms_(backoff_ms) {
    // Accept http://host:port, host:port, or bare host (port 80).
    std::string rest = base_url;
    const std::string scheme = "http://";
    if (rest.rfind(scheme, 0) == 0) rest = rest.substr(scheme.size());
    if (rest.rfind("https://", 0) == 0) {
        throw InputError("remote oracle supports http:// URLs only");
    }
    while (!rest.empty() && rest.back() == '/') rest.pop_back();
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
        host_ = rest;
    } else {
        host_ = rest.substr(0, colon);
        try {
            port_ = std::stoi(rest.substr(colon + 1));
        } catch (const std::exception&) {
            throw InputError("invalid port in oracle URL: " + base_url);
        }
    }
    if (host_.empty()) throw InputError("invalid oracle URL: " + base_url);
}

SaliencyVerdict RemoteOracle::assess(const Vec3& position, const Poi& poi) {
    const json body = {
        {"poi",
         {{"name", poi.name},
          {"relation", to_string(poi.relation)},
          {"aabb",
           {{"min", {poi.aabb.min.x(), poi.aabb.min.y(), poi.aabb.min.z()}},
            {"max", {poi.aabb.max.x(), poi.aabb.max.y(), poi.aabb.max.z()}}}}}},
        {"position", {position.x(), position.y(), position.z()}},
    };
    const std::string payload = body.dump();

    std::string response;
    bool got_response = false;
    std::string last_error;
    for (int attempt = 0; attempt < 3; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(
                std::chrono::milliseconds(backoff_ms_ << (attempt - 1)));
        }
        httplib::Client client(host_, port_);
        client.set_connection_timeout(5, 0);
        client.set_read_timeout(10, 0);
        auto res = client.Post("/assess", payload, "application/json");
        if (!res) {
            last_error = "connection failed: " + httplib::to_string(res.error());
            continue;
        }
        if (res->status != 200) {
            last_error = "server returned status " + std::to_string(res->status);
            continue;
        }
        response = res->body;
        got_response = true;
        break;
    }
    if (!got_response) {
        throw TransportError("oracle at " + host_ + ":" + std::to_string(port_) +
                             " unreachable after 3 attempts (" + last_error + ")");
    }

    json j;
    try {
        j = json::parse(response);
    } catch (const json::parse_error& e) {
        throw ProtocolError(std::string("oracle response is not JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("visible") || !j["visible"].is_boolean() ||
        !j.contains("saliency") || !j["saliency"].is_number() ||
        !j.contains("relation_ok") || !j["relation_ok"].is_boolean()) {
        throw ProtocolError("oracle response missing visible/saliency/relation_ok");
    }
    SaliencyVerdict v;
    v.visible = j["visible"].get<bool>();
    v.saliency = j["saliency"].get<double>();
    v.relation_ok = j["relation_ok"].get<bool>();
    if (!(v.saliency >= 0.0 && v.saliency <= 1.0)) {
        throw ProtocolError("oracle reported saliency " + std::to_string(v.saliency) +
                            " outside [0,1]");
    }
    if (!v.visible && v.saliency != 0.0) {
        throw ProtocolError("oracle reported nonzero saliency for an invisible POI");
    }
    return v;
}

}  // namespace insplan
