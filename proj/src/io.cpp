#include "sperner/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sperner {

namespace {

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& why) {
  throw std::runtime_error("labeling parse error at line " +
                           std::to_string(lineno) + ": " + why);
}

/// Split on single spaces; collapse nothing, so the format stays bit-exact.
std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t next = s.find(' ', pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      break;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

int to_int(std::string_view t, std::size_t lineno) {
  int v = 0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size())
    parse_fail(lineno, "expected integer, got '" + std::string(t) + "'");
  return v;
}

} // namespace

void write_labeling(std::ostream& os, const Labeling& lab) {
  os << "#labeling k=" << lab.k() << " q=" << lab.q() << "\n";
  std::uint64_t r = 0;
  lab.lattice().for_each([&](std::span<const int> a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) os << ' ';
      os << a[i];
    }
    os << " -> " << lab.color_at_rank(r++) << "\n";
  });
}

Labeling read_labeling(std::istream& is) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(is, line)) parse_fail(lineno, "missing header");
  int k = 0, q = 0;
  {
    const auto t = tokens(line);
    if (t.size() != 3 || t[0] != "#labeling" || t[1].substr(0, 2) != "k=" ||
        t[2].substr(0, 2) != "q=")
      parse_fail(lineno, "expected '#labeling k=K q=Q'");
    k = to_int(t[1].substr(2), lineno);
    q = to_int(t[2].substr(2), lineno);
  }
  Labeling lab = [&] {
    try {
      return Labeling(k, q);
    } catch (const std::exception& e) {
      parse_fail(1, e.what());
    }
  }();

  const Lattice& lat = lab.lattice();
  Coords a(static_cast<std::size_t>(k));
  std::uint64_t rank = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) parse_fail(lineno, "empty line");
    if (rank >= lat.size()) parse_fail(lineno, "more lines than lattice points");
    const auto t = tokens(line);
    if (t.size() != static_cast<std::size_t>(k) + 2)
      parse_fail(lineno, "expected 'a1 .. ak -> c'");
    for (int i = 0; i < k; ++i)
      a[static_cast<std::size_t>(i)] = to_int(t[static_cast<std::size_t>(i)], lineno);
    if (t[static_cast<std::size_t>(k)] != "->") parse_fail(lineno, "expected '->'");
    const int c = to_int(t.back(), lineno);
    if (!lat.contains(a)) parse_fail(lineno, "point not in the lattice");
    if (lat.rank(a) != rank) parse_fail(lineno, "points out of canonical order");
    if (c < 1 || c > k) parse_fail(lineno, "color out of range 1..k");
    lab.set_color_at_rank(rank, c);
    ++rank;
  }
  if (rank != lat.size())
    parse_fail(lineno + 1, "missing lattice points (got " + std::to_string(rank) +
                               " of " + std::to_string(lat.size()) + ")");
  return lab;
}

void write_points(std::ostream& os, const Lattice& lattice) {
  lattice.for_each([&](std::span<const int> a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i) os << ' ';
      os << a[i];
    }
    os << "\n";
  });
}

void write_cells(std::ostream& os, int k, int q) {
  if (q < 1) throw std::invalid_argument("write_cells: q must be >= 1");
  os << "#cells k=" << k << " q=" << q << "\n";
  write_points(os, Lattice(k, q - 1));
}

} // namespace sperner
