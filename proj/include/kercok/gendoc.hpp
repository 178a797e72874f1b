#pragma once

#include "kercok/genprop.hpp"
#include "kercok/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kercok {

/// Instance kinds accepted by gen_document, each paired with the verify
/// operation its task descriptor names.
const std::vector<std::string>& gen_kinds();

/// One generated diagram document; "harada" yields a chain document and
/// needs an FP ring, "complex" needs INT. Throws InputError otherwise.
Json gen_document(const std::string& kind, const GenConfig& cfg);

/// count documents from streams child_seed(cfg.seed, 0..count-1).
std::vector<Json> gen_documents(const std::string& kind, const GenConfig& cfg, int count);

std::uint64_t fnv1a64(const std::string& bytes, std::uint64_t h = 0xcbf29ce484222325ULL);
/// FNV-1a over the canonical dumps of gen_documents, as 16 hex digits.
std::string stream_digest(const std::string& kind, const GenConfig& cfg, int count);

} // namespace kercok
