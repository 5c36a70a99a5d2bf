#include "hyperpolar/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "hyperpolar/errors.hpp"

namespace hyperpolar {

std::string format_g17(double value) {
  std::array<char, 32> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

namespace {

constexpr const char* kInputHeader = "t,z_r,z_i";
constexpr const char* kPolarHeader = "t,a,b,c,d,f_Br,f_Bi";
constexpr const char* kPolarHeaderExtended =
    "t,a,b,c,d,f_Br,f_Bi,phi_A,f_A,alpha,beta,gamma";

double parse_field(const std::string& field, const std::string& path,
                   std::size_t line_no) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  // tolerate leading whitespace; from_chars itself is strict
  while (begin < end && (*begin == ' ' || *begin == '\t')) ++begin;
  double value = 0.0;
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc{} || res.ptr != end)
    throw input_error("read_csv", path + ": malformed number '" + field +
                                      "' at line " + std::to_string(line_no));
  return value;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return fields;
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

ComplexSeries read_input_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("read_csv", "cannot open '" + path + "'");

  std::string line;
  if (!std::getline(in, line))
    throw input_error("read_csv", path + ": empty file");
  line = strip_cr(line);
  if (line != kInputHeader)
    throw input_error("read_csv", path + ": expected header '" +
                                      std::string(kInputHeader) + "', got '" +
                                      line + "'");

  std::vector<double> times;
  ComplexSeries out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto fields = split_row(line);
    if (fields.size() != 3)
      throw input_error("read_csv", path + ": expected 3 fields at line " +
                                        std::to_string(line_no));
    const double t = parse_field(fields[0], path, line_no);
    const double zr = parse_field(fields[1], path, line_no);
    const double zi = parse_field(fields[2], path, line_no);
    times.push_back(t);
    out.values.emplace_back(zr, zi);
  }
  if (times.size() < 2)
    throw input_error("read_csv", path + ": need at least 2 rows");

  const double dt = times[1] - times[0];
  if (dt <= 0.0)
    throw input_error("read_csv", path + ": non-increasing time at line 3");
  const double tol = 1e-9 * std::abs(dt);
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double step = times[i] - times[i - 1];
    if (std::abs(step - dt) > tol)
      throw input_error("read_csv",
                        path + ": non-uniform time grid at line " +
                            std::to_string(i + 2) + " (dt = " + format_g17(step) +
                            ", expected " + format_g17(dt) + ")");
  }
  out.grid = {times[0], dt};
  return out;
}

void write_input_csv(const std::string& path, const ComplexSeries& z) {
  std::ofstream out(path);
  if (!out) throw input_error("write_csv", "cannot open '" + path + "' for writing");
  out << kInputHeader << "\n";
  for (std::size_t i = 0; i < z.size(); ++i) {
    out << format_g17(z.grid.time(i)) << ',' << format_g17(z.values[i].real())
        << ',' << format_g17(z.values[i].imag()) << "\n";
  }
  if (!out) throw input_error("write_csv", "write failed for '" + path + "'");
}

void write_polar_csv(const std::string& path, const PolarDecomposition& polar,
                     const InstFrequencySeries& frequency, bool extended_columns) {
  std::ofstream out(path);
  if (!out) throw input_error("write_csv", "cannot open '" + path + "' for writing");
  out << (extended_columns ? kPolarHeaderExtended : kPolarHeader) << "\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < polar.envelope.size(); ++i) {
    out << format_g17(polar.grid.time(i)) << ','
        << format_g17(polar.envelope.values[i].real()) << ','
        << format_g17(polar.envelope.values[i].imag()) << ','
        << format_g17(polar.phase.values[i].real()) << ','
        << format_g17(polar.phase.values[i].imag()) << ','
        << format_g17(frequency.f_b[i].real()) << ','
        << format_g17(frequency.f_b[i].imag());
    if (extended_columns) {
      const double fa = frequency.f_a ? (*frequency.f_a)[i] : nan;
      out << ',' << format_g17(polar.envelope_phase.values[i]) << ','
          << format_g17(fa) << ',' << format_g17(polar.carrier.alpha[i]) << ','
          << format_g17(polar.carrier.beta[i]) << ','
          << format_g17(polar.carrier.gamma[i]);
    }
    out << "\n";
  }
  if (!out) throw input_error("write_csv", "write failed for '" + path + "'");
}

namespace {

void write_panel(const std::string& path, const std::string& header,
                 const std::vector<std::vector<double>>& columns,
                 const SampleGrid& grid, std::size_t n) {
  std::ofstream out(path);
  if (!out) throw input_error("write_plot_data", "cannot open '" + path + "'");
  out << header << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << format_g17(grid.time(i));
    for (const auto& col : columns) out << ',' << format_g17(col[i]);
    out << "\n";
  }
}

std::vector<double> real_of(const ComplexSeries& s) {
  std::vector<double> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = s.values[i].real();
  return v;
}

std::vector<double> imag_of(const ComplexSeries& s) {
  std::vector<double> v(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) v[i] = s.values[i].imag();
  return v;
}

}  // namespace

void write_plot_data(const std::string& directory, const ComplexSeries& z,
                     const PolarDecomposition& polar,
                     const InstFrequencySeries& frequency, const PlotTruth& truth) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec)
    throw input_error("write_plot_data",
                      "cannot create directory '" + directory + "': " + ec.message());

  const std::size_t n = polar.envelope.size();
  const std::string dir = directory + "/";

  // Sign-ambiguous envelope reconstruction ||q|| * axis, for comparison
  // against the recovered one.
  std::vector<double> raw_re(n), raw_im(n);
  for (std::size_t i = 0; i < n; ++i) {
    raw_re[i] = polar.magnitude.values[i] * polar.axis.values[i].real();
    raw_im[i] = polar.magnitude.values[i] * polar.axis.values[i].imag();
  }

  auto with_truth = [&](std::vector<std::vector<double>> cols,
                        const std::string& base_header,
                        const std::vector<double>* ideal,
                        const std::string& ideal_name) {
    std::string header = base_header;
    if (ideal) {
      cols.push_back(*ideal);
      header += "," + ideal_name;
    }
    return std::pair{cols, header};
  };

  std::vector<double> ideal_a_re, ideal_a_im, ideal_b_re, ideal_b_im;
  std::vector<double> ideal_f_re, ideal_f_im;
  if (truth.envelope) {
    ideal_a_re = real_of(*truth.envelope);
    ideal_a_im = imag_of(*truth.envelope);
  }
  if (truth.phase) {
    ideal_b_re = real_of(*truth.phase);
    ideal_b_im = imag_of(*truth.phase);
  }
  if (truth.frequency) {
    ideal_f_re = real_of(*truth.frequency);
    ideal_f_im = imag_of(*truth.frequency);
  }

  std::vector<double> f_re(n), f_im(n);
  for (std::size_t i = 0; i < n; ++i) {
    f_re[i] = frequency.f_b[i].real();
    f_im[i] = frequency.f_b[i].imag();
  }

  {
    auto [cols, header] = with_truth({real_of(z), real_of(polar.envelope), raw_re},
                                     "t,z_r,a_tilde,a_breve",
                                     truth.envelope ? &ideal_a_re : nullptr, "a_ideal");
    write_panel(dir + "envelope_re.csv", header, cols, polar.grid, n);
  }
  {
    auto [cols, header] = with_truth({imag_of(z), imag_of(polar.envelope), raw_im},
                                     "t,z_i,b_tilde,b_breve",
                                     truth.envelope ? &ideal_a_im : nullptr, "b_ideal");
    write_panel(dir + "envelope_im.csv", header, cols, polar.grid, n);
  }
  {
    auto [cols, header] = with_truth(
        {real_of(polar.phase), real_of(polar.phase_wrapped)}, "t,c_tilde,c_breve",
        truth.phase ? &ideal_b_re : nullptr, "c_ideal");
    write_panel(dir + "phase_re.csv", header, cols, polar.grid, n);
  }
  {
    auto [cols, header] = with_truth(
        {imag_of(polar.phase), imag_of(polar.phase_wrapped)}, "t,d_tilde,d_breve",
        truth.phase ? &ideal_b_im : nullptr, "d_ideal");
    write_panel(dir + "phase_im.csv", header, cols, polar.grid, n);
  }
  {
    auto [cols, header] =
        with_truth({f_re}, "t,f_Br", truth.frequency ? &ideal_f_re : nullptr,
                   "f_Br_ideal");
    write_panel(dir + "freq_re.csv", header, cols, polar.grid, n);
  }
  {
    auto [cols, header] =
        with_truth({f_im}, "t,f_Bi", truth.frequency ? &ideal_f_im : nullptr,
                   "f_Bi_ideal");
    write_panel(dir + "freq_im.csv", header, cols, polar.grid, n);
  }
}

std::string file_checksum(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("checksum", "cannot open '" + path + "'");
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << hash;
  return os.str();
}

}  // namespace hyperpolar
