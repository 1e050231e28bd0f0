#include "numsg/census.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "numsg/errors.hpp"
#include "numsg/genus_walk.hpp"
#include "numsg/oracle.hpp"
#include "numsg/trees.hpp"

namespace numsg {

std::string_view name(CensusMethod method) {
  switch (method) {
    case CensusMethod::BTrees: return "b_trees";
    case CensusMethod::ClassicalOracle: return "classical_oracle";
    case CensusMethod::ClassicalWalk: return "classical_walk";
  }
  return "?";
}

CensusMethod parse_census_method(std::string_view text) {
  std::string t;
  for (char ch : text) t += ch == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "b_trees" || t == "trees" || t == "b") return CensusMethod::BTrees;
  if (t == "classical_oracle" || t == "oracle") return CensusMethod::ClassicalOracle;
  if (t == "classical_walk" || t == "walk") return CensusMethod::ClassicalWalk;
  throw ParseError("unknown census method '" + std::string(text) + "' (expected b_trees, oracle or walk)");
}

namespace {

struct LeftCounter {
  int genus = 0;
  std::vector<std::uint64_t> by_left;

  void operator()(WalkNode const& node) {
    if (node.genus == genus) ++by_left[static_cast<std::size_t>(node.left())];
  }
  void merge(LeftCounter const& other) {
    for (std::size_t i = 0; i < by_left.size(); ++i) by_left[i] += other.by_left[i];
  }
};

struct GenusCounter {
  std::vector<std::uint64_t> by_genus;

  void operator()(WalkNode const& node) { ++by_genus[static_cast<std::size_t>(node.genus)]; }
  void merge(GenusCounter const& other) {
    for (std::size_t i = 0; i < by_genus.size(); ++i) by_genus[i] += other.by_genus[i];
  }
};

std::vector<std::uint64_t> oracle_by_left(int g) {
  auto pop = oracle::enumerate_all(g);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(g) + 2, 0);
  for (auto const& s : pop.by_genus[static_cast<std::size_t>(g)]) ++out[static_cast<std::size_t>(s.left_count())];
  return out;
}

}  // namespace

CensusCounts census_counts(int g, CensusMethod method, unsigned threads) {
  if (g < 0) throw DomainError("census needs g >= 0");
  CensusCounts out;
  out.method = method;
  const std::size_t width = static_cast<std::size_t>(g) + 2;
  switch (method) {
    case CensusMethod::ClassicalOracle:
      out.nodes_by_left = oracle_by_left(g);
      break;
    case CensusMethod::ClassicalWalk: {
      LeftCounter proto{g, std::vector<std::uint64_t>(width, 0)};
      out.nodes_by_left = walk_classical_tree(g, threads, proto).by_left;
      break;
    }
    case CensusMethod::BTrees:
      if (g <= 3) {
        out.nodes_by_left = oracle_by_left(g);
        break;
      }
      out.nodes_by_left.assign(width, 0);
      out.leaves_by_left.assign(width, 0);
      out.nodes_by_left[1] = 1;  // the ordinary semigroup {0, g+1, ->}
      for (int n = 2; n <= g; ++n) {
        BuildOptions opts;
        opts.leaves_only = true;
        opts.threads = threads;
        auto tree = build_tree(TreeKind::B, g, n, opts);
        out.nodes_by_left[static_cast<std::size_t>(n)] = tree.node_count;
        out.leaves_by_left[static_cast<std::size_t>(n)] = tree.leaf_count;
      }
      break;
  }
  for (auto c : out.nodes_by_left) out.total += c;
  return out;
}

CensusSummary census(int g, std::vector<CensusMethod> const& methods, unsigned threads) {
  CensusSummary summary;
  summary.genus = g;
  for (auto m : methods) summary.methods.push_back(census_counts(g, m, threads));
  if (summary.methods.empty()) return summary;
  auto const& ref = summary.methods.front().nodes_by_left;
  for (std::size_t n = 0; n < ref.size(); ++n) {
    for (auto const& other : summary.methods) {
      if (other.nodes_by_left[n] != ref[n]) {
        summary.agree = false;
        summary.disagreeing_left.push_back(static_cast<int>(n));
        break;
      }
    }
  }
  return summary;
}

std::vector<std::uint64_t> genus_counts(int max_genus, unsigned threads) {
  if (max_genus < 0) return {};
  GenusCounter proto{std::vector<std::uint64_t>(static_cast<std::size_t>(max_genus) + 1, 0)};
  return walk_classical_tree(max_genus, threads, proto).by_genus;
}

Json to_json(CensusSummary const& summary) {
  Json j;
  j["genus"] = summary.genus;
  Json methods = Json::array();
  for (auto const& m : summary.methods) {
    Json mj;
    mj["method"] = std::string(name(m.method));
    Json rows = Json::array();
    for (std::size_t n = 1; n < m.nodes_by_left.size(); ++n) {
      if (static_cast<int>(n) > std::max(summary.genus, 1)) break;
      Json row;
      row["left"] = n;
      row["nodes"] = m.nodes_by_left[n];
      if (!m.leaves_by_left.empty() && n >= 2) row["leaves"] = m.leaves_by_left[n];
      rows.push_back(std::move(row));
    }
    mj["by_left"] = std::move(rows);
    mj["total"] = m.total;
    methods.push_back(std::move(mj));
  }
  j["methods"] = std::move(methods);
  j["agree"] = summary.agree;
  j["disagreeing_left"] = summary.disagreeing_left;
  return j;
}

std::string to_table(CensusSummary const& summary) {
  std::ostringstream os;
  os << "genus " << summary.genus << "\n";
  os << std::setw(4) << "n";
  for (auto const& m : summary.methods) os << std::setw(18) << name(m.method);
  bool leaves = false;
  for (auto const& m : summary.methods) leaves = leaves || !m.leaves_by_left.empty();
  if (leaves) os << std::setw(10) << "leaves";
  os << "\n";
  const int top = std::max(summary.genus, 1);
  for (int n = 1; n <= top; ++n) {
    os << std::setw(4) << n;
    std::uint64_t leaf = 0;
    for (auto const& m : summary.methods) {
      os << std::setw(18) << m.nodes_by_left[static_cast<std::size_t>(n)];
      if (!m.leaves_by_left.empty()) leaf = m.leaves_by_left[static_cast<std::size_t>(n)];
    }
    if (leaves) {
      if (n >= 2) {
        os << std::setw(10) << leaf;
      } else {
        os << std::setw(10) << "-";
      }
    }
    os << "\n";
  }
  os << std::setw(4) << "all";
  for (auto const& m : summary.methods) os << std::setw(18) << m.total;
  os << "\n";
  os << (summary.agree ? "methods agree" : "methods DISAGREE") << "\n";
  return os.str();
}

}  // namespace numsg
