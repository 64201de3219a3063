#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mcbrot/classifier.hpp"
#include "mcbrot/dynamics.hpp"
#include "mcbrot/multicomplex.hpp"

namespace mcbrot {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// A renderable slice: power, spanning triple, coefficient box, resolution
// and iteration budget.
struct SliceSpec {
  int power = 2;
  UnitTriple triple;
  std::array<Interval, 3> bounds{};
  std::array<int, 3> resolution{0, 0, 0};
  EscapeParams params;
};

// Escape-count field over a slice's coefficient box. Count 0 means bounded
// within the budget, k > 0 means escaped at iteration k. Layout is
// x-fastest, then y, then z.
struct VoxelGrid {
  SliceSpec spec;
  std::vector<std::uint16_t> counts;

  std::size_t index(int x, int y, int z) const {
    return static_cast<std::size_t>(x) +
           static_cast<std::size_t>(spec.resolution[0]) *
               (static_cast<std::size_t>(y) +
                static_cast<std::size_t>(spec.resolution[1]) * static_cast<std::size_t>(z));
  }

  bool occupied(int x, int y, int z) const { return counts[index(x, y, z)] == 0; }

  double cell_size(int axis) const {
    return (spec.bounds[axis].hi - spec.bounds[axis].lo) / spec.resolution[axis];
  }

  std::array<double, 3> cell_center(int x, int y, int z) const {
    const std::array<int, 3> idx{x, y, z};
    std::array<double, 3> c;
    for (int i = 0; i < 3; ++i)
      c[i] = spec.bounds[i].lo + (idx[i] + 0.5) * cell_size(i);
    return c;
  }

  // Grid cell containing a world point, or nullopt outside the box (or for
  // non-finite coordinates).
  std::optional<std::array<int, 3>> nearest_cell(const std::array<double, 3>& w) const {
    std::array<int, 3> idx;
    for (int i = 0; i < 3; ++i) {
      const double rel = (w[i] - spec.bounds[i].lo) / cell_size(i);
      if (!(rel >= 0.0) || rel >= static_cast<double>(spec.resolution[i])) return std::nullopt;
      idx[i] = static_cast<int>(rel);
    }
    return idx;
  }

  std::size_t occupied_count() const {
    std::size_t n = 0;
    for (auto c : counts)
      if (c == 0) ++n;
    return n;
  }
};

// Samples cell centers with the authoritative idempotent membership test.
// Rows (fixed y,z) are independent work units handed to `threads` workers;
// every cell value is written to its own slot, so output is identical for
// any worker count.
inline VoxelGrid sample_slice(const SliceSpec& spec, int threads = 1) {
  for (int i = 0; i < 3; ++i) {
    if (spec.resolution[i] < 2)
      throw std::invalid_argument("sample_slice: resolution must be >= 2 per axis");
    if (!(spec.bounds[i].hi > spec.bounds[i].lo))
      throw std::invalid_argument("sample_slice: empty bounds");
  }
  const std::size_t cells = static_cast<std::size_t>(spec.resolution[0]) * spec.resolution[1] *
                            static_cast<std::size_t>(spec.resolution[2]);
  if (cells > (std::size_t{1} << 31)) throw std::invalid_argument("sample_slice: resolution overflow");
  if (spec.params.max_iter < 1 || spec.params.max_iter > 65535)
    throw std::invalid_argument("sample_slice: max_iter must fit a 16-bit count");

  VoxelGrid grid;
  grid.spec = spec;
  grid.counts.assign(cells, 0);

  const int nx = spec.resolution[0], ny = spec.resolution[1], nz = spec.resolution[2];
  const std::size_t rows = static_cast<std::size_t>(ny) * nz;

  auto sample_row = [&](std::size_t row) {
    const int y = static_cast<int>(row % ny);
    const int z = static_cast<int>(row / ny);
    for (int x = 0; x < nx; ++x) {
      const auto c = grid.cell_center(x, y, z);
      Multicomplex value(spec.triple.order);
      for (int i = 0; i < 3; ++i) value.coeff(spec.triple.units[i]) = c[i];
      const MembershipResult res = member_idempotent(value, spec.power, spec.params);
      grid.counts[grid.index(x, y, z)] =
          res.escaped ? static_cast<std::uint16_t>(*res.escape_iteration) : 0;
    }
  };

  if (threads <= 1) {
    for (std::size_t row = 0; row < rows; ++row) sample_row(row);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min<int>(threads, static_cast<int>(rows));
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t row = next.fetch_add(1); row < rows; row = next.fetch_add(1))
          sample_row(row);
      });
    }
    for (auto& th : pool) th.join();
  }
  return grid;
}

// ---------------------------------------------------------------------------
// MBV1 file format (little-endian), 69-byte header then payload:
//   offset  size  field
//        0     4  magic "MBV1"
//        4     1  version (1)
//        5     3  reserved (0)
//        8    12  nx, ny, nz as u32
//       20    48  bounds as f64: xmin xmax ymin ymax zmin zmax
//       68     1  payload type (1 = u16 escape counts)
//       69   2*N  nx*ny*nz u16 counts, x-fastest
// File size is 69 + 2*nx*ny*nz bytes.
// ---------------------------------------------------------------------------

namespace detail {

inline void put_u32(std::ostream& out, std::uint32_t v) {
  const unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                              static_cast<unsigned char>(v >> 16),
                              static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

inline void put_u16(std::ostream& out, std::uint16_t v) {
  const unsigned char b[2] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8)};
  out.write(reinterpret_cast<const char*>(b), 2);
}

inline void put_f64(std::ostream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

inline bool get_bytes(std::istream& in, unsigned char* b, std::size_t n) {
  in.read(reinterpret_cast<char*>(b), static_cast<std::streamsize>(n));
  return static_cast<std::size_t>(in.gcount()) == n;
}

inline std::uint32_t u32_from(const unsigned char* b) {
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

inline double f64_from(const unsigned char* b) {
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace detail

inline void write_mbv(const VoxelGrid& grid, std::ostream& out) {
  out.write("MBV1", 4);
  const unsigned char version_reserved[4] = {1, 0, 0, 0};
  out.write(reinterpret_cast<const char*>(version_reserved), 4);
  for (int i = 0; i < 3; ++i) detail::put_u32(out, static_cast<std::uint32_t>(grid.spec.resolution[i]));
  for (int i = 0; i < 3; ++i) {
    detail::put_f64(out, grid.spec.bounds[i].lo);
    detail::put_f64(out, grid.spec.bounds[i].hi);
  }
  const unsigned char payload_type = 1;
  out.write(reinterpret_cast<const char*>(&payload_type), 1);
  for (auto c : grid.counts) detail::put_u16(out, c);
  if (!out) throw std::runtime_error("mbv: write failure");
}

inline VoxelGrid read_mbv(std::istream& in) {
  unsigned char header[69];
  if (!detail::get_bytes(in, header, sizeof(header))) throw std::runtime_error("mbv: truncated header");
  if (std::memcmp(header, "MBV1", 4) != 0) throw std::runtime_error("mbv: bad magic");
  if (header[4] != 1) throw std::runtime_error("mbv: unsupported version");
  if (header[68] != 1) throw std::runtime_error("mbv: unsupported payload type");

  VoxelGrid grid;
  for (int i = 0; i < 3; ++i) {
    const std::uint32_t n = detail::u32_from(header + 8 + 4 * i);
    if (n < 1) throw std::runtime_error("mbv: bad resolution");
    grid.spec.resolution[i] = static_cast<int>(n);
  }
  for (int i = 0; i < 3; ++i) {
    grid.spec.bounds[i].lo = detail::f64_from(header + 20 + 16 * i);
    grid.spec.bounds[i].hi = detail::f64_from(header + 20 + 16 * i + 8);
  }
  // The payload carries geometry only; power/triple/params are not encoded.
  const std::size_t cells = static_cast<std::size_t>(grid.spec.resolution[0]) *
                            grid.spec.resolution[1] * grid.spec.resolution[2];
  if (cells > (std::size_t{1} << 31)) throw std::runtime_error("mbv: resolution overflow");
  grid.counts.resize(cells);
  for (std::size_t i = 0; i < cells; ++i) {
    unsigned char b[2];
    if (!detail::get_bytes(in, b, 2)) throw std::runtime_error("mbv: truncated payload");
    grid.counts[i] = static_cast<std::uint16_t>(b[0] | (b[1] << 8));
  }
  return grid;
}

inline void write_mbv_file(const VoxelGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("mbv: cannot open " + path);
  write_mbv(grid, out);
}

inline VoxelGrid read_mbv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("mbv: cannot open " + path);
  return read_mbv(in);
}

// Wavefront OBJ export: one axis-aligned cube (8 vertices, 12 triangles) per
// occupied voxel at its cell box, no vertex deduplication, 1-based indices.
inline void export_obj(const VoxelGrid& grid, std::ostream& out) {
  std::size_t base = 0;
  out << "# occupancy mesh, one cube per bounded voxel\n";
  for (int z = 0; z < grid.spec.resolution[2]; ++z) {
    for (int y = 0; y < grid.spec.resolution[1]; ++y) {
      for (int x = 0; x < grid.spec.resolution[0]; ++x) {
        if (!grid.occupied(x, y, z)) continue;
        const auto c = grid.cell_center(x, y, z);
        const double hx = 0.5 * grid.cell_size(0), hy = 0.5 * grid.cell_size(1),
                     hz = 0.5 * grid.cell_size(2);
        for (int corner = 0; corner < 8; ++corner) {
          const double vx = c[0] + ((corner & 1) ? hx : -hx);
          const double vy = c[1] + ((corner & 2) ? hy : -hy);
          const double vz = c[2] + ((corner & 4) ? hz : -hz);
          out << "v " << vx << ' ' << vy << ' ' << vz << '\n';
        }
        static const int faces[12][3] = {{0, 2, 1}, {1, 2, 3}, {4, 5, 6}, {5, 7, 6},
                                         {0, 1, 4}, {1, 5, 4}, {2, 6, 3}, {3, 6, 7},
                                         {0, 4, 2}, {2, 4, 6}, {1, 3, 5}, {3, 7, 5}};
        for (const auto& f : faces)
          out << "f " << base + f[0] + 1 << ' ' << base + f[1] + 1 << ' ' << base + f[2] + 1
              << '\n';
        base += 8;
      }
    }
  }
  if (!out) throw std::runtime_error("obj: write failure");
}

// CSV of occupied voxel centers: header "x,y,z,count" then one line per
// occupied cell.
inline void export_csv_points(const VoxelGrid& grid, std::ostream& out) {
  out << "x,y,z,count\n";
  for (int z = 0; z < grid.spec.resolution[2]; ++z)
    for (int y = 0; y < grid.spec.resolution[1]; ++y)
      for (int x = 0; x < grid.spec.resolution[0]; ++x)
        if (grid.occupied(x, y, z)) {
          const auto c = grid.cell_center(x, y, z);
          out << c[0] << ',' << c[1] << ',' << c[2] << ',' << grid.counts[grid.index(x, y, z)]
              << '\n';
        }
  if (!out) throw std::runtime_error("csv: write failure");
}

}  // namespace mcbrot
