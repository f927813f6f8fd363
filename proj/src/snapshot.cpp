#include "nsf/fields/snapshot.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

static_assert(std::endian::native == std::endian::little,
              "snapshot payload is little-endian");

namespace nsf::fields {
namespace {

void write_block(std::ofstream& out, const std::vector<Scalar>& v) {
  out.write(reinterpret_cast<const char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(Scalar)));
}

void read_block(std::ifstream& in, std::vector<Scalar>& v, size_t n, const std::string& name) {
  v.resize(n);
  in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(Scalar)));
  if (static_cast<size_t>(in.gcount()) != n * sizeof(Scalar))
    throw Error("snapshot: truncated payload, field '" + name + "' incomplete");
  for (size_t i = 0; i < n; ++i) {
    if (!std::isfinite(v[i])) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "snapshot: non-finite value in field '%s' at cell %zu",
                    name.c_str(), i);
      throw Error(buf);
    }
  }
}

}  // namespace

void write_snapshot(const State& s, const Grid& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), "snapshot: cannot open '" + path + "' for writing");
  out << "nsf-snapshot 1\n";
  out << "dim " << g.dim << "\n";
  out << "n " << g.n[0] << " " << g.n[1] << "\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "lo %.17g %.17g\nhi %.17g %.17g\ntime %.17g\n", g.lo[0],
                g.lo[1], g.hi[0], g.hi[1], s.t);
  out << buf;
  out << "fields rho" << (g.dim == 2 ? " mom_x mom_y" : " mom_x") << " rho_e\n";
  out << "binary\n";
  write_block(out, s.rho);
  for (int a = 0; a < g.dim; ++a) write_block(out, s.mom[a]);
  write_block(out, s.rho_e);
  require(out.good(), "snapshot: write failure on '" + path + "'");
}

std::pair<State, Grid> read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "snapshot: cannot open '" + path + "'");

  std::string line, tag;
  auto next = [&](const std::string& want) -> std::istringstream {
    require(static_cast<bool>(std::getline(in, line)), "snapshot: truncated header");
    std::istringstream ss(line);
    ss >> tag;
    require(tag == want, "snapshot: expected header line '" + want + "', got '" + line + "'");
    return ss;
  };

  {
    auto ss = next("nsf-snapshot");
    int version = 0;
    ss >> version;
    require(version == 1, "snapshot: unsupported version");
  }
  Grid g;
  {
    auto ss = next("dim");
    ss >> g.dim;
    require(g.dim == 1 || g.dim == 2, "snapshot: bad dimension");
  }
  {
    auto ss = next("n");
    ss >> g.n[0] >> g.n[1];
    require(g.n[0] >= 1 && g.n[1] >= 1, "snapshot: bad cell counts");
  }
  {
    auto ss = next("lo");
    ss >> g.lo[0] >> g.lo[1];
  }
  {
    auto ss = next("hi");
    ss >> g.hi[0] >> g.hi[1];
  }
  g.h = (g.hi[0] - g.lo[0]) / g.n[0];
  State s;
  {
    auto ss = next("time");
    ss >> s.t;
  }
  next("fields");
  next("binary");

  const size_t n = g.cells();
  read_block(in, s.rho, n, "rho");
  read_block(in, s.mom[0], n, "mom_x");
  if (g.dim == 2)
    read_block(in, s.mom[1], n, "mom_y");
  else
    s.mom[1].assign(n, 0.0);
  read_block(in, s.rho_e, n, "rho_e");
  return {std::move(s), g};
}

}  // namespace nsf::fields
