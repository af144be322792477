#include "rieszcheck/field_io.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "rieszcheck/error.hpp"

namespace rieszcheck {

namespace {

constexpr std::array<char, 4> kMagic{'R', 'Z', 'F', '1'};

void put_u32(std::ostream& out, std::uint32_t v) {
  std::array<char, 4> b{};
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
  out.write(b.data(), b.size());
}

void put_f64(std::ostream& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  std::array<char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((bits >> (8 * i)) & 0xffu);
  out.write(b.data(), b.size());
}

void read_exact(std::istream& in, char* dst, std::size_t count, const char* what) {
  in.read(dst, static_cast<std::streamsize>(count));
  if (static_cast<std::size_t>(in.gcount()) != count) {
    throw Error(ErrorCode::TruncatedPayload, std::string("truncated payload while reading ") + what);
  }
}

std::uint32_t get_u32(std::istream& in, const char* what) {
  std::array<unsigned char, 4> b{};
  read_exact(in, reinterpret_cast<char*>(b.data()), b.size(), what);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

double get_f64(std::istream& in, const char* what) {
  std::array<unsigned char, 8> b{};
  read_exact(in, reinterpret_cast<char*>(b.data()), b.size(), what);
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

void check_finite(const Field& f) {
  if (!f.all_finite()) throw Error(ErrorCode::NonFiniteValue, "field contains non-finite values");
}

GridSpec checked_spec(int d, std::size_t n, double h, const Point& origin) {
  if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDimension, "unsupported dimension");
  GridSpec spec;
  spec.d = d;
  spec.n = n;
  spec.h = h;
  spec.origin = origin;
  if (!std::isfinite(h)) throw Error(ErrorCode::NonFiniteValue, "non-finite grid spacing");
  for (int k = 0; k < d; ++k) {
    if (!std::isfinite(origin[k])) throw Error(ErrorCode::NonFiniteValue, "non-finite origin");
  }
  spec.validate();
  return spec;
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ifstream in(path, mode);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open " + path.string());
  return in;
}

}  // namespace

void write_field(const Field& f, std::ostream& out) {
  check_finite(f);
  const GridSpec& spec = f.spec();
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, static_cast<std::uint32_t>(spec.d));
  for (int k = 0; k < spec.d; ++k) put_u32(out, static_cast<std::uint32_t>(spec.n));
  put_f64(out, spec.h);
  for (int k = 0; k < spec.d; ++k) put_f64(out, spec.origin[k]);
  for (double v : f.values()) put_f64(out, v);
  if (!out) throw Error(ErrorCode::IoFailure, "write failed");
}

void write_field(const Field& f, const std::filesystem::path& path) {
  auto out = open_out(path, std::ios::binary);
  write_field(f, out);
}

Field read_field(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (in.gcount() != 4 || magic != kMagic) throw Error(ErrorCode::BadMagic, "bad magic");
  const std::uint32_t d = get_u32(in, "dimension");
  if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDimension, "unsupported dimension");
  std::array<std::uint32_t, 3> dims{0, 0, 0};
  for (std::uint32_t k = 0; k < d; ++k) dims[k] = get_u32(in, "dims");
  for (std::uint32_t k = 1; k < d; ++k) {
    if (dims[k] != dims[0]) throw Error(ErrorCode::UnsupportedShape, "non-cubic grids are not supported");
  }
  const double h = get_f64(in, "spacing");
  Point origin{0.0, 0.0, 0.0};
  for (std::uint32_t k = 0; k < d; ++k) origin[k] = get_f64(in, "origin");
  const GridSpec spec = checked_spec(static_cast<int>(d), dims[0], h, origin);
  std::vector<double> values(spec.size());
  for (double& v : values) v = get_f64(in, "values");
  Field f(spec, std::move(values));
  check_finite(f);
  return f;
}

Field read_field(const std::filesystem::path& path) {
  auto in = open_in(path, std::ios::binary);
  return read_field(in);
}

void write_field_csv(const Field& f, std::ostream& out) {
  check_finite(f);
  const GridSpec& spec = f.spec();
  out << std::setprecision(17);
  out << "# " << spec.d << ' ' << spec.n << ' ' << spec.h;
  for (int k = 0; k < spec.d; ++k) out << ' ' << spec.origin[k];
  out << '\n';
  for (double v : f.values()) out << v << '\n';
  if (!out) throw Error(ErrorCode::IoFailure, "write failed");
}

void write_field_csv(const Field& f, const std::filesystem::path& path) {
  auto out = open_out(path, std::ios::out);
  write_field_csv(f, out);
}

Field read_field_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind('#', 0) != 0) {
    throw Error(ErrorCode::BadMagic, "bad magic: csv header must start with '#'");
  }
  std::istringstream header(line.substr(1));
  int d = 0;
  std::size_t n = 0;
  double h = 0.0;
  if (!(header >> d >> n >> h)) throw Error(ErrorCode::TruncatedPayload, "truncated csv header");
  if (d < 1 || d > 3) throw Error(ErrorCode::UnsupportedDimension, "unsupported dimension");
  Point origin{0.0, 0.0, 0.0};
  for (int k = 0; k < d; ++k) {
    if (!(header >> origin[k])) throw Error(ErrorCode::TruncatedPayload, "truncated csv header");
  }
  const GridSpec spec = checked_spec(d, n, h, origin);
  std::vector<double> values;
  values.reserve(spec.size());
  while (values.size() < spec.size() && std::getline(in, line)) {
    if (line.empty()) continue;
    // strtod accepts "nan"/"inf", which the finiteness check then rejects.
    char* end = nullptr;
    const double v = std::strtod(line.c_str(), &end);
    if (end == line.c_str()) throw Error(ErrorCode::InvalidArgument, "malformed csv value: " + line);
    values.push_back(v);
  }
  if (values.size() != spec.size()) throw Error(ErrorCode::TruncatedPayload, "truncated csv payload");
  Field f(spec, std::move(values));
  check_finite(f);
  return f;
}

Field read_field_csv(const std::filesystem::path& path) {
  auto in = open_in(path, std::ios::in);
  return read_field_csv(in);
}

Field load_field(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? read_field_csv(path) : read_field(path);
}

void save_field(const Field& f, const std::filesystem::path& path) {
  if (path.extension() == ".csv") {
    write_field_csv(f, path);
  } else {
    write_field(f, path);
  }
}

}  // namespace rieszcheck
