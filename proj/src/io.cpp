#include "drkit/io.hpp"

#include "drkit/version.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <sstream>

namespace drkit {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos) throw std::invalid_argument("file does not end with a newline");
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (start <= line.size()) {
        std::size_t sp = line.find(' ', start);
        if (sp == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, sp - start));
        start = sp + 1;
    }
    for (const auto& f : fields)
        if (f.empty()) throw std::invalid_argument("malformed spacing in line: '" + line + "'");
    return fields;
}

Index parse_index(const std::string& text) {
    Index value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("expected an integer, got '" + text + "'");
    return value;
}

// "key=value" with an exact key.
std::string expect_kv(const std::string& line, const std::string& key) {
    const std::string prefix = key + "=";
    if (line.rfind(prefix, 0) != 0)
        throw std::invalid_argument("expected '" + key + "=...', got '" + line + "'");
    return line.substr(prefix.size());
}

void require_header(const std::vector<std::string>& lines, const std::string& tag) {
    if (lines.empty() || lines[0] != tag)
        throw std::invalid_argument("missing '" + tag + "' header");
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string family_to_string(const VectorFamily& fam) {
    std::string out = "HWF 1\n";
    out += "n=" + std::to_string(fam.dimension()) + " p=" + std::to_string(fam.weight()) +
           " m=" + std::to_string(fam.size()) + "\n";
    for (const auto& v : fam) {
        for (std::size_t i = 0; i < v.support.size(); ++i) {
            if (i) out.push_back(' ');
            out += std::to_string(v.support[i]);
        }
        out.push_back('\n');
    }
    return out;
}

VectorFamily family_from_string(const std::string& text) {
    auto lines = split_lines(text);
    require_header(lines, "HWF 1");
    if (lines.size() < 2) throw std::invalid_argument("family file missing the shape line");
    auto shape = split_fields(lines[1]);
    if (shape.size() != 3) throw std::invalid_argument("family shape line must be 'n=.. p=.. m=..'");
    Index n = parse_index(expect_kv(shape[0], "n"));
    Index p = parse_index(expect_kv(shape[1], "p"));
    Index m = parse_index(expect_kv(shape[2], "m"));
    if (static_cast<std::size_t>(m) != lines.size() - 2)
        throw std::invalid_argument("family file declares m=" + std::to_string(m) + " but has " +
                                    std::to_string(lines.size() - 2) + " vector lines");
    VectorFamily fam(n, p);
    for (std::size_t k = 2; k < lines.size(); ++k) {
        std::vector<Index> support;
        for (const auto& field : split_fields(lines[k])) support.push_back(parse_index(field));
        fam.push_back(SupportVector::make(n, std::move(support)));  // rejects duplicates and bad shapes
    }
    return fam;
}

void save_family(const VectorFamily& fam, const std::filesystem::path& path) {
    atomic_write(path, family_to_string(fam));
}

VectorFamily load_family(const std::filesystem::path& path) { return family_from_string(read_file(path)); }

std::string params_to_string(const CisParams& params) {
    std::string out = "CISPARAMS 1\n";
    out += "t=" + std::to_string(params.t) + "\n";
    out += "a=" + std::to_string(params.a) + "\n";
    out += "p=" + std::to_string(params.p) + "\n";
    out += "q=" + std::to_string(params.q) + "\n";
    out += "n=" + std::to_string(params.n) + "\n";
    out += "alpha=" + format_rational(params.alpha) + "\n";
    out += "C=" + format_rational(params.C) + "\n";
    out += "lambda=" + format_rational(params.lambda) + "\n";
    return out;
}

CisParams params_from_string(const std::string& text) {
    auto lines = split_lines(text);
    require_header(lines, "CISPARAMS 1");
    if (lines.size() != 9) throw std::invalid_argument("params file must have exactly 8 key lines");
    CisParams pr;
    pr.t = parse_index(expect_kv(lines[1], "t"));
    pr.a = parse_index(expect_kv(lines[2], "a"));
    pr.p = parse_index(expect_kv(lines[3], "p"));
    pr.q = parse_index(expect_kv(lines[4], "q"));
    pr.n = parse_index(expect_kv(lines[5], "n"));
    pr.alpha = parse_rational(expect_kv(lines[6], "alpha"));
    pr.C = parse_rational(expect_kv(lines[7], "C"));
    pr.lambda = parse_rational(expect_kv(lines[8], "lambda"));
    return pr;
}

void save_params(const CisParams& params, const std::filesystem::path& path) {
    atomic_write(path, params_to_string(params));
}

CisParams load_params(const std::filesystem::path& path) { return params_from_string(read_file(path)); }

namespace {

void append_tree(const BlockTree& node, std::string& out) {
    if (node.is_leaf()) {
        out += std::to_string(node.leaf_index + 1);
        return;
    }
    out.push_back('(');
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) out.push_back(' ');
        append_tree(node.children[i], out);
    }
    out.push_back(')');
}

BlockTree parse_tree(const std::string& text, std::size_t& pos, Index level) {
    if (pos >= text.size()) throw std::invalid_argument("tree expression ends unexpectedly");
    BlockTree node;
    node.level = level;
    if (text[pos] == '(') {
        ++pos;
        for (;;) {
            if (pos >= text.size()) throw std::invalid_argument("unbalanced '(' in tree expression");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] == ' ') {
                ++pos;
                continue;
            }
            node.children.push_back(parse_tree(text, pos, level - 1));
        }
        if (node.children.empty()) throw std::invalid_argument("empty node in tree expression");
        return node;
    }
    std::size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != ')') ++end;
    node.leaf_index = parse_index(text.substr(pos, end - pos)) - 1;
    if (node.leaf_index < 0) throw std::invalid_argument("leaf indices are 1-based");
    pos = end;
    return node;
}

}  // namespace

std::string tree_to_string(const BlockTree& tree, const CisParams& params) {
    std::string out = "BLOCKTREE 1\n";
    out += "t=" + std::to_string(params.t) + "\n";
    out += "q=" + std::to_string(params.q) + "\n";
    append_tree(tree, out);
    out.push_back('\n');
    return out;
}

BlockTree tree_from_string(const std::string& text) {
    auto lines = split_lines(text);
    require_header(lines, "BLOCKTREE 1");
    if (lines.size() != 4) throw std::invalid_argument("tree file must have header, t, q, and one expression line");
    Index t = parse_index(expect_kv(lines[1], "t"));
    parse_index(expect_kv(lines[2], "q"));  // recorded for readers; structure speaks for itself
    std::size_t pos = 0;
    BlockTree root = parse_tree(lines[3], pos, t);
    if (pos != lines[3].size()) throw std::invalid_argument("trailing characters after tree expression");
    return root;
}

void save_tree(const BlockTree& tree, const CisParams& params, const std::filesystem::path& path) {
    atomic_write(path, tree_to_string(tree, params));
}

BlockTree load_tree(const std::filesystem::path& path) { return tree_from_string(read_file(path)); }

std::string certificate_to_string(const ExtractionCertificate& cert) {
    std::string out = "DRCERT 1\n";
    out += "C=" + format_rational(cert.C) + "\n";
    out += "t=" + std::to_string(cert.t) + "\n";
    out += std::string("kind=") + (cert.kind == ExtractionCertificate::Kind::ball ? "ball" : "net") + "\n";
    out += "level=" + std::to_string(cert.level) + "\n";
    if (cert.kind == ExtractionCertificate::Kind::ball)
        out += "center=" + std::to_string(cert.center + 1) + "\n";
    out += "chain=";
    for (std::size_t i = 0; i < cert.chain_sizes.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(cert.chain_sizes[i]);
    }
    out.push_back('\n');
    out += "subset=";
    for (std::size_t i = 0; i < cert.subset.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(cert.subset[i] + 1);
    }
    out.push_back('\n');
    return out;
}

ExtractionCertificate certificate_from_string(const std::string& text) {
    auto lines = split_lines(text);
    require_header(lines, "DRCERT 1");
    ExtractionCertificate cert;
    std::size_t k = 1;
    cert.C = parse_rational(expect_kv(lines.at(k++), "C"));
    cert.t = parse_index(expect_kv(lines.at(k++), "t"));
    std::string kind = expect_kv(lines.at(k++), "kind");
    if (kind == "ball")
        cert.kind = ExtractionCertificate::Kind::ball;
    else if (kind == "net")
        cert.kind = ExtractionCertificate::Kind::net;
    else
        throw std::invalid_argument("certificate kind must be ball or net, got '" + kind + "'");
    cert.level = parse_index(expect_kv(lines.at(k++), "level"));
    if (cert.kind == ExtractionCertificate::Kind::ball)
        cert.center = parse_index(expect_kv(lines.at(k++), "center")) - 1;
    for (const auto& field : split_fields(expect_kv(lines.at(k++), "chain")))
        cert.chain_sizes.push_back(parse_index(field));
    std::string subset = expect_kv(lines.at(k++), "subset");
    if (!subset.empty())
        for (const auto& field : split_fields(subset)) {
            Index ix = parse_index(field);
            if (ix < 1) throw std::invalid_argument("subset indices are 1-based");
            cert.subset.push_back(static_cast<std::size_t>(ix - 1));
        }
    if (k != lines.size()) throw std::invalid_argument("trailing lines in certificate file");
    return cert;
}

void save_certificate(const ExtractionCertificate& cert, const std::filesystem::path& path) {
    atomic_write(path, certificate_to_string(cert));
}

ExtractionCertificate load_certificate(const std::filesystem::path& path) {
    return certificate_from_string(read_file(path));
}

std::string manifest_to_string(const Manifest& manifest) {
    std::string out = "MANIFEST 1\n";
    out += std::string("tool=drkit ") + kVersion + "\n";
    out += "command=" + manifest.command + "\n";
    for (const auto& [flag, value] : manifest.args) out += "arg." + flag + "=" + value + "\n";
    for (const auto& [role, path] : manifest.inputs)
        out += "input." + role + "=" + path + " sha256=" + sha256_hex(read_file(path)) + "\n";
    for (const auto& [role, path] : manifest.outputs)
        out += "output." + role + "=" + path + " sha256=" + sha256_hex(read_file(path)) + "\n";
    return out;
}

void save_manifest(const Manifest& manifest, const std::filesystem::path& path) {
    atomic_write(path, manifest_to_string(manifest));
}

}  // namespace drkit
