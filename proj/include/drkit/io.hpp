#pragma once

// Plain-text file formats. Every format is diff-able, deterministic, and
// round-trips byte for byte; rationals are serialized as "num/den". Writes
// go through write-temp-then-rename.
//
//   family      HWF 1 / n=.. p=.. m=.. / one ascending support per line
//   params      CISPARAMS 1, one key per line
//   block tree  BLOCKTREE 1, then nested parenthesized 1-based leaf indices
//   certificate DRCERT 1, one key per line
//   manifest    MANIFEST 1: command, args, file digests

#include "drkit/construct.hpp"
#include "drkit/extract.hpp"
#include "drkit/support_vector.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace drkit {

std::string sha256_hex(const std::string& bytes);
void atomic_write(const std::filesystem::path& path, const std::string& bytes);
std::string read_file(const std::filesystem::path& path);

std::string family_to_string(const VectorFamily& fam);
VectorFamily family_from_string(const std::string& text);
void save_family(const VectorFamily& fam, const std::filesystem::path& path);
VectorFamily load_family(const std::filesystem::path& path);

std::string params_to_string(const CisParams& params);
CisParams params_from_string(const std::string& text);
void save_params(const CisParams& params, const std::filesystem::path& path);
CisParams load_params(const std::filesystem::path& path);

// Trees serialize as partition structure only; frames are not persisted.
std::string tree_to_string(const BlockTree& tree, const CisParams& params);
BlockTree tree_from_string(const std::string& text);
void save_tree(const BlockTree& tree, const CisParams& params, const std::filesystem::path& path);
BlockTree load_tree(const std::filesystem::path& path);

std::string certificate_to_string(const ExtractionCertificate& cert);
ExtractionCertificate certificate_from_string(const std::string& text);
void save_certificate(const ExtractionCertificate& cert, const std::filesystem::path& path);
ExtractionCertificate load_certificate(const std::filesystem::path& path);

struct Manifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> args;    // flag -> value, in flag order
    std::vector<std::pair<std::string, std::string>> inputs;  // role -> path
    std::vector<std::pair<std::string, std::string>> outputs;
};

// Digests are computed from the named files at serialization time.
std::string manifest_to_string(const Manifest& manifest);
void save_manifest(const Manifest& manifest, const std::filesystem::path& path);

}  // namespace drkit
