#include "stripcalc/report.hpp"

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace stripcalc {

namespace {

// Compact SHA-1; enough for content fingerprints in reports.
struct Sha1 {
  std::array<std::uint32_t, 5> h = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu,
                                    0x10325476u, 0xC3D2E1F0u};
  std::array<std::uint8_t, 64> block{};
  std::uint64_t total = 0;
  std::size_t fill = 0;

  static std::uint32_t rol(std::uint32_t x, int s) { return (x << s) | (x >> (32 - s)); }

  void process() {
    std::array<std::uint32_t, 80> w{};
    for (int i = 0; i < 16; ++i)
      w[i] = (std::uint32_t(block[4 * i]) << 24) | (std::uint32_t(block[4 * i + 1]) << 16) |
             (std::uint32_t(block[4 * i + 2]) << 8) | std::uint32_t(block[4 * i + 3]);
    for (int i = 16; i < 80; ++i) w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
    auto [a, b, c, d, e] = h;
    for (int i = 0; i < 80; ++i) {
      std::uint32_t f, k;
      if (i < 20) {
        f = (b & c) | (~b & d);
        k = 0x5A827999u;
      } else if (i < 40) {
        f = b ^ c ^ d;
        k = 0x6ED9EBA1u;
      } else if (i < 60) {
        f = (b & c) | (b & d) | (c & d);
        k = 0x8F1BBCDCu;
      } else {
        f = b ^ c ^ d;
        k = 0xCA62C1D6u;
      }
      const std::uint32_t t = rol(a, 5) + f + e + k + w[i];
      e = d;
      d = c;
      c = rol(b, 30);
      b = a;
      a = t;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
  }

  void update(const void* data, std::size_t len) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    total += len;
    while (len > 0) {
      const std::size_t take = std::min(len, block.size() - fill);
      std::copy(p, p + take, block.begin() + fill);
      fill += take;
      p += take;
      len -= take;
      if (fill == block.size()) {
        process();
        fill = 0;
      }
    }
  }

  std::string finish() {
    const std::uint64_t bits = total * 8;
    const std::uint8_t pad = 0x80;
    update(&pad, 1);
    const std::uint8_t zero = 0;
    while (fill != 56) update(&zero, 1);
    for (int i = 7; i >= 0; --i) {
      const std::uint8_t b = static_cast<std::uint8_t>(bits >> (8 * i));
      update(&b, 1);
    }
    char out[41];
    for (int i = 0; i < 5; ++i) std::snprintf(out + 8 * i, 9, "%08x", h[i]);
    return std::string(out, 40);
  }
};

}  // namespace

std::string content_hash(const std::string& bytes) {
  Sha1 sha;
  const std::string header = "blob " + std::to_string(bytes.size()) + '\0';
  sha.update(header.data(), header.size());
  sha.update(bytes.data(), bytes.size());
  return sha.finish();
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvWriter::add_row(const std::vector<std::string>& cells) { rows_.push_back(cells); }

void CsvWriter::add_row(const std::vector<double>& cells) {
  std::vector<std::string> row;
  row.reserve(cells.size());
  for (double v : cells) row.push_back(format_double(v));
  rows_.push_back(std::move(row));
}

std::string CsvWriter::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns_.size(); ++i)
    os << (i ? "," : "") << columns_[i];
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
  }
  return os.str();
}

void CsvWriter::write(const std::string& path) const { write_text_file(path, str()); }

json to_json(const AssumptionParams& p) {
  return json{{"beta", p.beta}, {"sigma", p.sigma}, {"varpi", p.varpi},
              {"gamma", p.gamma}, {"W", p.W}};
}

json to_json(const VerificationReport& rep) {
  json cases = json::array();
  for (const auto& c : rep.cases)
    cases.push_back(json{{"id", c.id}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"constant", c.constant}});
  return json{{"assumption", rep.assumption},
              {"backend", rep.backend},
              {"params", to_json(rep.params)},
              {"per_case", cases},
              {"suite_constant", rep.suite_constant},
              {"refinement_ratio", rep.refinement_ratio},
              {"verdict", rep.verdict}};
}

void write_grid_function(const GridFunction& f, const std::string& path) {
  CsvWriter csv({"x", "re", "im"});
  for (Index i = 0; i < f.grid.size(); ++i)
    csv.add_row(std::vector<double>{f.grid.point(i), f.values[i].real(), f.values[i].imag()});
  csv.write(path);
}

GridFunction read_grid_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidGrid("cannot open " + path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> xs;
  std::vector<Complex> vals;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double x = 0, re = 0, im = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &x, &re, &im) < 2)
      throw InvalidGrid("malformed row in " + path);
    xs.push_back(x);
    vals.emplace_back(re, im);
  }
  if (xs.size() < 3) throw InvalidGrid("grid file needs at least 3 samples");
  const double h = xs[1] - xs[0];
  const double L = -xs.front();
  if (std::abs(xs.back() - L) > 1e-9 * std::max(1.0, L))
    throw InvalidGrid("grid file is not symmetric");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (std::abs(xs[i] - xs[i - 1] - h) > 1e-9 * h)
      throw InvalidGrid("grid file is not uniform");
  GridFunction f;
  f.grid = GridSpec::make(L, h);
  f.values = Eigen::Map<const ArrayXcd>(vals.data(), static_cast<Index>(vals.size()));
  f.validate();
  return f;
}

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << body;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace stripcalc
