#include "simplex_nodes/golden.hpp"

namespace simplex_nodes::golden
{
static const char* const nodes_p1[] = {
    "1.000000000000000,0,0,0,0",
    "0,1.000000000000000,0,0,0",
    "0,0,1.000000000000000,0,0",
    "0,0,0,1.000000000000000,0",
    "0,0,0,0,1.000000000000000",
};

static const char* const nodes_p2[] = {
    "1.000000000000000,0,0,0,0",
    "0.500000000000000,0.500000000000000,0,0,0",
    "0,1.000000000000000,0,0,0",
    "0.500000000000000,0,0.500000000000000,0,0",
    "0,0.500000000000000,0.500000000000000,0,0",
    "0,0,1.000000000000000,0,0",
    "0.500000000000000,0,0,0.500000000000000,0",
    "0,0.500000000000000,0,0.500000000000000,0",
    "0,0,0.500000000000000,0.500000000000000,0",
    "0,0,0,1.000000000000000,0",
    "0.500000000000000,0,0,0,0.500000000000000",
    "0,0.500000000000000,0,0,0.500000000000000",
    "0,0,0.500000000000000,0,0.500000000000000",
    "0,0,0,0.500000000000000,0.500000000000000",
    "0,0,0,0,1.000000000000000",
};

static const char* const nodes_p3[] = {
    "1.000000000000000,0,0,0,0",
    "0.723606797749979,0.276393202250021,0,0,0",
    "0.276393202250021,0.723606797749979,0,0,0",
    "0,1.000000000000000,0,0,0",
    "0.723606797749979,0,0.276393202250021,0,0",
    "0.333333333333333,0.333333333333333,0.333333333333333,0,0",
    "0,0.723606797749979,0.276393202250021,0,0",
    "0.276393202250021,0,0.723606797749979,0,0",
    "0,0.276393202250021,0.723606797749979,0,0",
    "0,0,1.000000000000000,0,0",
    "0.723606797749979,0,0,0.276393202250021,0",
    "0.333333333333333,0.333333333333333,0,0.333333333333333,0",
    "0,0.723606797749979,0,0.276393202250021,0",
    "0.333333333333333,0,0.333333333333333,0.333333333333333,0",
    "0,0.333333333333333,0.333333333333333,0.333333333333333,0",
    "0,0,0.723606797749979,0.276393202250021,0",
    "0.276393202250021,0,0,0.723606797749979,0",
    "0,0.276393202250021,0,0.723606797749979,0",
    "0,0,0.276393202250021,0.723606797749979,0",
    "0,0,0,1.000000000000000,0",
    "0.723606797749979,0,0,0,0.276393202250021",
    "0.333333333333333,0.333333333333333,0,0,0.333333333333333",
    "0,0.723606797749979,0,0,0.276393202250021",
    "0.333333333333333,0,0.333333333333333,0,0.333333333333333",
    "0,0.333333333333333,0.333333333333333,0,0.333333333333333",
    "0,0,0.723606797749979,0,0.276393202250021",
    "0.333333333333333,0,0,0.333333333333333,0.333333333333333",
    "0,0.333333333333333,0,0.333333333333333,0.333333333333333",
    "0,0,0.333333333333333,0.333333333333333,0.333333333333333",
    "0,0,0,0.723606797749979,0.276393202250021",
    "0.276393202250021,0,0,0,0.723606797749979",
    "0,0.276393202250021,0,0,0.723606797749979",
    "0,0,0.276393202250021,0,0.723606797749979",
    "0,0,0,0.276393202250021,0.723606797749979",
    "0,0,0,0,1.000000000000000",
};

static const char* const nodes_p4[] = {
    "1.000000000000000,0,0,0,0",
    "0.827326835353989,0.172673164646011,0,0,0",
    "0.500000000000000,0.500000000000000,0,0,0",
    "0.172673164646011,0.827326835353989,0,0,0",
    "0,1.000000000000000,0,0,0",
    "0.827326835353989,0,0.172673164646011,0,0",
    "0.551551223569326,0.224224388215337,0.224224388215337,0,0",
    "0.224224388215337,0.551551223569326,0.224224388215337,0,0",
    "0,0.827326835353989,0.172673164646011,0,0",
    "0.500000000000000,0,0.500000000000000,0,0",
    "0.224224388215337,0.224224388215337,0.551551223569326,0,0",
    "0,0.500000000000000,0.500000000000000,0,0",
    "0.172673164646011,0,0.827326835353989,0,0",
    "0,0.172673164646011,0.827326835353988,0,0",
    "0,0,1.000000000000000,0,0",
    "0.827326835353989,0,0,0.172673164646011,0",
    "0.551551223569326,0.224224388215337,0,0.224224388215337,0",
    "0.224224388215337,0.551551223569326,0,0.224224388215337,0",
    "0,0.827326835353989,0,0.172673164646011,0",
    "0.551551223569326,0,0.224224388215337,0.224224388215337,0",
    "0.250000000000000,0.250000000000000,0.250000000000000,0.250000000000000,0",
    "0,0.551551223569326,0.224224388215337,0.224224388215337,0",
    "0.224224388215337,0,0.551551223569326,0.224224388215337,0",
    "0,0.224224388215337,0.551551223569326,0.224224388215337,0",
    "0,0,0.827326835353989,0.172673164646011,0",
    "0.500000000000000,0,0,0.500000000000000,0",
    "0.224224388215337,0.224224388215337,0,0.551551223569326,0",
    "0,0.500000000000000,0,0.500000000000000,0",
    "0.224224388215337,0,0.224224388215337,0.551551223569326,0",
    "0,0.224224388215337,0.224224388215337,0.551551223569326,0",
    "0,0,0.500000000000000,0.500000000000000,0",
    "0.172673164646011,0,0,0.827326835353988,0",
    "0,0.172673164646011,0,0.827326835353988,0",
    "0,0,0.172673164646011,0.827326835353988,0",
    "0,0,0,1.000000000000000,0",
    "0.827326835353989,0,0,0,0.172673164646011",
    "0.551551223569326,0.224224388215337,0,0,0.224224388215337",
    "0.224224388215337,0.551551223569326,0,0,0.224224388215337",
    "0,0.827326835353989,0,0,0.172673164646011",
    "0.551551223569326,0,0.224224388215337,0,0.224224388215337",
    "0.250000000000000,0.250000000000000,0.250000000000000,0,0.250000000000000",
    "0,0.551551223569326,0.224224388215337,0,0.224224388215337",
    "0.224224388215337,0,0.551551223569326,0,0.224224388215337",
    "0,0.224224388215337,0.551551223569326,0,0.224224388215337",
    "0,0,0.827326835353989,0,0.172673164646011",
    "0.551551223569326,0,0,0.224224388215337,0.224224388215337",
    "0.250000000000000,0.250000000000000,0,0.250000000000000,0.250000000000000",
    "0,0.551551223569326,0,0.224224388215337,0.224224388215337",
    "0.250000000000000,0,0.250000000000000,0.250000000000000,0.250000000000000",
    "0,0.250000000000000,0.250000000000000,0.250000000000000,0.250000000000000",
    "0,0,0.551551223569326,0.224224388215337,0.224224388215337",
    "0.224224388215337,0,0,0.551551223569326,0.224224388215337",
    "0,0.224224388215337,0,0.551551223569326,0.224224388215337",
    "0,0,0.224224388215337,0.551551223569326,0.224224388215337",
    "0,0,0,0.827326835353989,0.172673164646011",
    "0.500000000000000,0,0,0,0.500000000000000",
    "0.224224388215337,0.224224388215337,0,0,0.551551223569326",
    "0,0.500000000000000,0,0,0.500000000000000",
    "0.224224388215337,0,0.224224388215337,0,0.551551223569326",
    "0,0.224224388215337,0.224224388215337,0,0.551551223569326",
    "0,0,0.500000000000000,0,0.500000000000000",
    "0.224224388215337,0,0,0.224224388215337,0.551551223569326",
    "0,0.224224388215337,0,0.224224388215337,0.551551223569326",
    "0,0,0.224224388215337,0.224224388215337,0.551551223569326",
    "0,0,0,0.500000000000000,0.500000000000000",
    "0.172673164646011,0,0,0,0.827326835353989",
    "0,0.172673164646011,0,0,0.827326835353989",
    "0,0,0.172673164646011,0,0.827326835353989",
    "0,0,0,0.172673164646011,0.827326835353989",
    "0,0,0,0,1.000000000000000",
};

std::span<const char* const> node_table(int order)
{
  switch (order)
  {
  case 1:
    return nodes_p1;
  case 2:
    return nodes_p2;
  case 3:
    return nodes_p3;
  case 4:
    return nodes_p4;
  default:
    return {};
  }
}

const std::array<std::array<Fraction, 15>, 5>& coefficient_table()
{
  static const std::array<std::array<Fraction, 15>, 5> table = {{
      {{{533, 12}, {-251, 24}, {13, 12}, {-1, 24}, {107, 6}, {-6, 1}, {1, 2}, {-3, 1}, {1, 2}, {1, 6}, {11, 2}, {-1, 1}, {-1, 1}, {-1, 2}, {1, 1}}},
      {{{275, 4}, {-335, 24}, {5, 4}, {-1, 24}, {73, 3}, {-7, 1}, {1, 2}, {-7, 2}, {1, 2}, {1, 6}, {13, 2}, {-1, 1}, {-1, 1}, {-1, 2}, {1, 1}}},
      {{{1207, 12}, {-431, 24}, {17, 12}, {-1, 24}, {191, 6}, {-8, 1}, {1, 2}, {-4, 1}, {1, 2}, {1, 6}, {15, 2}, {-1, 1}, {-1, 1}, {-1, 2}, {1, 1}}},
      {{{1691, 12}, {-539, 24}, {19, 12}, {-1, 24}, {121, 3}, {-9, 1}, {1, 2}, {-9, 2}, {1, 2}, {1, 6}, {17, 2}, {-1, 1}, {-1, 1}, {-1, 2}, {1, 1}}},
      {{{763, 4}, {-659, 24}, {7, 4}, {-1, 24}, {299, 6}, {-10, 1}, {1, 2}, {-5, 1}, {1, 2}, {1, 6}, {19, 2}, {-1, 1}, {-1, 1}, {-1, 2}, {1, 1}}},
  }};
  return table;
}

const std::array<LebesgueRow, 10>& lebesgue_table()
{
  static const std::array<LebesgueRow, 10> table = {{
      {1, 0.0, 1.0000, 1.0000, 1.0000, 0.01, 0.0},
      {2, 0.0, 2.2000, 2.2000, 2.2000, 0.01, 0.0},
      {3, 0.0, 4.2000, 4.2000, 3.8800, 0.01, 0.0},
      {4, 0.0, 6.1240, 6.1240, 6.2384, 0.01, 0.0},
      {5, 0.0, 8.6423, 8.6423, 10.9171, 0.01, 0.0},
      {6, 1.5000, 12.0326, 12.1297, 19.1418, 0.02, 19.22},
      {7, 2.2500, 17.1032, 18.0971, 33.8915, 0.02, 34.08},
      {8, 1.8890, 23.9226, 26.0423, 60.5048, 0.02, 60.86},
      {9, 1.5000, 36.1110, 39.1431, 109.4267, 0.02, 109.43},
      {10, 1.5469, 53.3404, 57.7742, 194.8739, 0.04, 198.08},
  }};
  return table;
}

const std::array<ReproducingSpacing, 10>& reproducing_spacings()
{
  static const std::array<ReproducingSpacing, 10> table = {{
      {1, 0.01, 0.01, 0.01},
      {2, 0.01, 0.01, 0.01},
      {3, 0.01, 0.01, 0.01},
      {4, 0.01, 0.01, 0.01},
      {5, 0.02, 0.02, 0.01},
      {6, 0.02, 0.02, 0.01},
      {7, 0.01, 0.01, 0.01},
      {8, 0.01, 0.01, 0.01},
      {9, 0.02, 0.02, 0.02},
      {10, 0.02, 0.02, 0.04},
  }};
  return table;
}

} // namespace simplex_nodes::golden
