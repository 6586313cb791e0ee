#include "sftconj/block_map.hpp"

#include <fstream>
#include <sstream>

#include "sftconj/errors.hpp"

namespace sftconj {

namespace {

std::size_t parse_size(const std::string& text, const std::string& what, std::size_t line) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || text[0] == '-')
    throw ParseError("line " + std::to_string(line) + ": bad " + what + " value '" + text + "'");
  return static_cast<std::size_t>(value);
}

}  // namespace

BlockMap::BlockMap(std::size_t block_size, std::size_t memory) : k_(block_size), m_(memory) {
  if (k_ == 0) throw ContractError("block size must be at least 1");
  if (m_ >= k_) throw ContractError("memory must be at most k-1");
}

void BlockMap::set(const Word& key, const Symbol& value) {
  if (key.size() != k_)
    throw ContractError("block map key has length " + std::to_string(key.size()) +
                        ", expected " + std::to_string(k_));
  if (value.empty()) throw ContractError("block map value must be non-empty");
  table_[key] = value;
}

const Symbol* BlockMap::find(const Word& key) const {
  auto it = table_.find(key);
  return it == table_.end() ? nullptr : &it->second;
}

const Symbol& BlockMap::at(const Word& key) const {
  if (const Symbol* s = find(key)) return *s;
  std::string w;
  for (const auto& x : key) w += (w.empty() ? "" : " ") + x;
  throw ContractError("block map has no entry for '" + w + "'");
}

BlockMap parse_block_map(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  BlockMap phi;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (parts.empty()) continue;

    if (!have_header) {
      std::size_t k = 0, m = 0;
      bool seen_k = false, seen_m = false;
      for (const auto& p : parts) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
          throw ParseError("line " + std::to_string(line_no) + ": expected header 'k=<int> m=<int>'");
        std::string key = p.substr(0, eq), value = p.substr(eq + 1);
        if (key == "k" && !seen_k) {
          k = parse_size(value, "k", line_no);
          seen_k = true;
        } else if (key == "m" && !seen_m) {
          m = parse_size(value, "m", line_no);
          seen_m = true;
        } else {
          throw ParseError("line " + std::to_string(line_no) + ": unexpected header field '" + key + "'");
        }
      }
      if (!seen_k || !seen_m)
        throw ParseError("line " + std::to_string(line_no) + ": header needs both k and m");
      if (k == 0 || m >= k)
        throw ParseError("line " + std::to_string(line_no) + ": need k >= 1 and 0 <= m <= k-1");
      phi = BlockMap(k, m);
      have_header = true;
      continue;
    }

    if (parts.size() < 3 || parts[parts.size() - 2] != "->")
      throw ParseError("line " + std::to_string(line_no) + ": expected 'v1 ... vk -> u'");
    Word key(parts.begin(), parts.end() - 2);
    if (key.size() != phi.block_size())
      throw ParseError("line " + std::to_string(line_no) + ": word has " + std::to_string(key.size()) +
                       " symbols, expected " + std::to_string(phi.block_size()));
    for (const auto& s : key)
      if (s == "->") throw ParseError("line " + std::to_string(line_no) + ": stray '->'");
    if (phi.contains(key))
      throw ParseError("line " + std::to_string(line_no) + ": duplicate entry");
    phi.set(key, parts.back());
  }
  if (!have_header) throw ParseError("missing header 'k=<int> m=<int>'");
  return phi;
}

BlockMap parse_block_map_string(const std::string& text) {
  std::istringstream in(text);
  return parse_block_map(in);
}

BlockMap load_block_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open map file: " + path);
  return parse_block_map(in);
}

std::string format_block_map(const BlockMap& phi) {
  std::ostringstream out;
  out << "k=" << phi.block_size() << " m=" << phi.memory() << '\n';
  for (const auto& [key, value] : phi.table()) {
    for (const auto& s : key) out << s << ' ';
    out << "-> " << value << '\n';
  }
  return out.str();
}

OneBlockCode make_one_block(const DirectedGraph& g, const DirectedGraph& h, const BlockMap& phi) {
  if (phi.block_size() != 1) throw ContractError("expected a 1-block map");
  OneBlockCode code{g, h, std::vector<VertexId>(g.vertex_count())};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Symbol* img = phi.find({g.name(v)});
    if (!img) throw ContractError("1-block map undefined on vertex " + g.name(v));
    auto target = h.find(*img);
    if (!target) throw ContractError("image " + *img + " is not a target vertex");
    code.image[v] = *target;
  }
  return code;
}

BlockMap to_block_map(const OneBlockCode& code) {
  BlockMap phi(1, 0);
  for (VertexId v = 0; v < code.source.vertex_count(); ++v)
    phi.set({code.source.name(v)}, code.target.name(code.image.at(v)));
  return phi;
}

}  // namespace sftconj
