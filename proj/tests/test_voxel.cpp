#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "mcbrot/dynamics.hpp"
#include "mcbrot/equivalence.hpp"
#include "mcbrot/voxel.hpp"

using namespace mcbrot;

namespace {

SliceSpec airbrot_spec(int res, int max_iter = 500) {
  SliceSpec spec;
  spec.power = 2;
  spec.triple = UnitTriple(3, {UnitIndex{0}, UnitIndex{0b011}, UnitIndex{0b101}});
  spec.bounds = {Interval{-1.1, 1.1}, Interval{-1.1, 1.1}, Interval{-1.1, 1.1}};
  spec.resolution = {res, res, res};
  spec.params.max_iter = max_iter;
  return spec;
}

std::string serialize(const VoxelGrid& grid) {
  std::ostringstream out(std::ios::binary);
  write_mbv(grid, out);
  return out.str();
}

}  // namespace

TEST(Sample, CenterCellIsBounded) {
  const auto grid = sample_slice(airbrot_spec(33));
  EXPECT_EQ(grid.counts[grid.index(16, 16, 16)], 0);  // c = 0
}

TEST(Sample, FarFieldEscapesImmediately) {
  SliceSpec spec = airbrot_spec(5);
  spec.bounds = {Interval{12.0, 13.0}, Interval{12.0, 13.0}, Interval{12.0, 13.0}};
  const auto grid = sample_slice(spec);
  for (auto c : grid.counts) {
    EXPECT_GT(c, 0);
    EXPECT_LE(c, 2);
  }
}

TEST(Sample, MatchesDirectMembershipCalls) {
  const auto grid = sample_slice(airbrot_spec(9));
  for (int z = 0; z < 9; ++z)
    for (int y = 0; y < 9; ++y)
      for (int x = 0; x < 9; ++x) {
        const auto c = grid.cell_center(x, y, z);
        Multicomplex value(3);
        for (int i = 0; i < 3; ++i) value.coeff(grid.spec.triple.units[i]) = c[i];
        const auto res = member_idempotent(value, 2, grid.spec.params);
        const std::uint16_t want = res.escaped ? static_cast<std::uint16_t>(*res.escape_iteration) : 0;
        EXPECT_EQ(grid.counts[grid.index(x, y, z)], want);
      }
}

TEST(Sample, WorkerCountDoesNotChangeBytes) {
  const auto spec = airbrot_spec(17);
  const auto g1 = serialize(sample_slice(spec, 1));
  const auto g2 = serialize(sample_slice(spec, 2));
  const auto g5 = serialize(sample_slice(spec, 5));
  EXPECT_EQ(g1, g2);
  EXPECT_EQ(g1, g5);
}

TEST(Sample, BudgetMonotonicity) {
  SliceSpec lo = airbrot_spec(9, 40);
  SliceSpec hi = airbrot_spec(9, 200);
  const auto a = sample_slice(lo);
  const auto b = sample_slice(hi);
  for (std::size_t i = 0; i < a.counts.size(); ++i) {
    if (b.counts[i] != 0 && b.counts[i] <= 40) {
      EXPECT_EQ(a.counts[i], b.counts[i]);
    }
    if (a.counts[i] == 0 && b.counts[i] != 0) {
      EXPECT_GT(b.counts[i], 40);
    }
  }
}

TEST(Sample, ValidatesSpec) {
  SliceSpec spec = airbrot_spec(9);
  spec.resolution = {1, 9, 9};
  EXPECT_THROW(sample_slice(spec), std::invalid_argument);
  spec = airbrot_spec(9);
  spec.bounds[0] = Interval{1.0, 1.0};
  EXPECT_THROW(sample_slice(spec), std::invalid_argument);
  spec = airbrot_spec(9);
  spec.params.max_iter = 70000;
  EXPECT_THROW(sample_slice(spec), std::invalid_argument);
}

TEST(Sample, AirbrotExtentMatchesRealAxisOctahedron) {
  // The occupied region's 1-norm extent in the two hyperbolic directions
  // peaks at the octahedron radius (right - left)/2 from the real axis.
  const auto grid = sample_slice(airbrot_spec(33));
  const auto axis = real_axis_interval(2);
  const double radius = 0.5 * (axis.right - axis.left);
  double peak = 0.0;
  for (int z = 0; z < 33; ++z)
    for (int y = 0; y < 33; ++y)
      for (int x = 0; x < 33; ++x)
        if (grid.occupied(x, y, z)) {
          const auto c = grid.cell_center(x, y, z);
          peak = std::max(peak, std::abs(c[1]) + std::abs(c[2]));
        }
  EXPECT_NEAR(peak, radius, 2.0 * grid.cell_size(0));
}

TEST(Mbv, RoundTripIsBitExact) {
  const auto grid = sample_slice(airbrot_spec(9));
  const auto bytes = serialize(grid);
  std::istringstream in(bytes, std::ios::binary);
  const auto back = read_mbv(in);
  EXPECT_EQ(serialize(back), bytes);
  EXPECT_EQ(back.counts, grid.counts);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(back.spec.resolution[i], grid.spec.resolution[i]);
    EXPECT_EQ(back.spec.bounds[i].lo, grid.spec.bounds[i].lo);
    EXPECT_EQ(back.spec.bounds[i].hi, grid.spec.bounds[i].hi);
  }
}

TEST(Mbv, FileSizeFormula) {
  VoxelGrid grid;
  grid.spec = airbrot_spec(33);
  grid.counts.assign(33 * 33 * 33, 1);
  EXPECT_EQ(serialize(grid).size(), 69u + 2u * 33 * 33 * 33);
}

TEST(Mbv, RejectsCorruptStreams) {
  const auto grid = sample_slice(airbrot_spec(9));
  auto bytes = serialize(grid);

  auto corrupted = bytes;
  corrupted[0] = 'X';
  std::istringstream bad_magic(corrupted, std::ios::binary);
  EXPECT_THROW(read_mbv(bad_magic), std::runtime_error);

  corrupted = bytes;
  corrupted[4] = 9;
  std::istringstream bad_version(corrupted, std::ios::binary);
  EXPECT_THROW(read_mbv(bad_version), std::runtime_error);

  std::istringstream truncated(bytes.substr(0, bytes.size() - 3), std::ios::binary);
  EXPECT_THROW(read_mbv(truncated), std::runtime_error);

  std::istringstream tiny(bytes.substr(0, 10), std::ios::binary);
  EXPECT_THROW(read_mbv(tiny), std::runtime_error);
}

TEST(ObjExport, CubePerOccupiedVoxel) {
  VoxelGrid grid;
  grid.spec = airbrot_spec(2);
  grid.spec.resolution = {2, 2, 2};
  grid.counts.assign(8, 1);
  grid.counts[0] = 0;  // exactly one occupied voxel

  std::ostringstream out;
  export_obj(grid, out);
  std::size_t vertices = 0, faces = 0;
  std::istringstream lines(out.str());
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("v ", 0) == 0) ++vertices;
    if (line.rfind("f ", 0) == 0) ++faces;
  }
  EXPECT_EQ(vertices, 8u);
  EXPECT_EQ(faces, 12u);

  grid.counts.assign(8, 1);  // empty grid still yields a valid OBJ
  std::ostringstream empty;
  export_obj(grid, empty);
  EXPECT_EQ(empty.str().find("\nv "), std::string::npos);
}

TEST(CsvExport, OneLinePerOccupiedVoxel) {
  const auto grid = sample_slice(airbrot_spec(9));
  std::ostringstream out;
  export_csv_points(grid, out);
  std::istringstream lines(out.str());
  std::string line;
  std::size_t rows = 0;
  ASSERT_TRUE(std::getline(lines, line));
  EXPECT_EQ(line, "x,y,z,count");
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, grid.occupied_count());
}
