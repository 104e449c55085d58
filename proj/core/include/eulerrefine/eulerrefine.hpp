#ifndef EULERREFINE_EULERREFINE_HPP
#define EULERREFINE_EULERREFINE_HPP

#include <eulerrefine/bigint.hpp>
#include <eulerrefine/bijection.hpp>
#include <eulerrefine/count_table.hpp>
#include <eulerrefine/permutation.hpp>
#include <eulerrefine/report.hpp>
#include <eulerrefine/sequences.hpp>
#include <eulerrefine/series.hpp>

#endif
