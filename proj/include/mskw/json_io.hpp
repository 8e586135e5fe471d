#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "mskw/constructions.hpp"
#include "mskw/isoperimetry.hpp"
#include "mskw/moser.hpp"

namespace mskw {

nlohmann::json to_json(const IndexSet& s);
/// A JSON array of indices as a set over {0..universe-1}.
IndexSet index_set_from_json(const nlohmann::json& j, std::size_t universe);
std::vector<std::uint32_t> index_list_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GroupTable& g);
nlohmann::json to_json(const WeakFragmentReport& r);
nlohmann::json to_json(const AtomPartition& p);
nlohmann::json to_json(const MoserReport& r);
nlohmann::json to_json(const ThetaPsi& tp);
nlohmann::json to_json(const MainCheck& c);
nlohmann::json to_json(const SphereStep& s);

/// Certificates are self-contained: group spec plus witness.
nlohmann::json sigma_certificate(const SigmaPermutation& s);
nlohmann::json cycles_certificate(const GroupSubset& generators, const CycleSystem& system);
nlohmann::json cycles_certificate(const Relation& r, const CycleSystem& system);
nlohmann::json zero_product_certificate(const ZeroProductCertificate& c);

struct CertificateCheck {
  bool valid = false;
  std::string kind;
  std::string reason;
};

/// Re-verifies a certificate produced by one of the functions above. Malformed
/// documents come back invalid with a reason rather than throwing.
CertificateCheck check_certificate(const nlohmann::json& certificate);

nlohmann::json to_json(const CertificateCheck& c);

}  // namespace mskw
