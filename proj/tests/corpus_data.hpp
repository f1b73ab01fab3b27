#pragma once

// Published solution sets of the 44 odd-target equations, one entry per row.
// `label` is the printed class; `reason` is the class it maps to under (R).

#include <string>
#include <vector>

#include "persist/solver.hpp"

namespace corpus {

struct Row {
    std::vector<persist::u64> a;
    persist::u64 u;
    persist::u64 w;
    persist::RecordStatus status;
    persist::DismissalReason reason;
    const char* label;
};

struct Set {
    std::string id;
    std::vector<Row> rows;
};

inline const std::vector<Set>& published_sets()
{
    using S = persist::RecordStatus;
    using R = persist::DismissalReason;
    static const std::vector<Set> sets{
        {"1.01",
         {
             {{1}, 2, 0, S::accepted, R::none, "accepted"},
         }},
        {"3.01",
         {
             {{1, 0}, 3, 0, S::accepted, R::none, "accepted"},
             {{1, 1}, 3, 1, S::dismissed, R::dnv_order, "dnv"},
         }},
        {"7.01",
         {
             {{1, 0}, 2, 1, S::accepted, R::none, "accepted"},
         }},
        {"9.01", {}},
        {"9.02",
         {
             {{1, 0}, 4, 0, S::accepted, R::none, "accepted"},
             {{1, 1}, 6, 0, S::dismissed, R::dnv_order, "dnv"},
         }},
        {"5.01",
         {
             {{0}, 2, 0, S::accepted, R::none, "accepted"},
             {{1}, 3, 0, S::accepted, R::none, "accepted"},
         }},
        {"5.02",
         {
             {{1, 0}, 2, 1, S::accepted, R::none, "accepted"},
             {{2, 0}, 5, 0, S::accepted, R::none, "accepted"},
             {{2, 1}, 4, 1, S::accepted, R::none, "accepted"},
         }},
        {"5.03",
         {
             {{3, 1}, 2, 3, S::accepted, R::none, "accepted"},
         }},
        {"5.04",
         {
             {{0}, 3, 0, S::accepted, R::none, "accepted"},
             {{1}, 2, 1, S::accepted, R::none, "accepted"},
         }},
        {"5.05",
         {
             {{0, 1, 0}, 2, 2, S::dismissed, R::dnv_order, "dnv"},
             {{3, 1, 1}, 2, 3, S::dismissed, R::anad, "dnv"},
         }},
        {"5.06",
         {
             {{0, 1, 0, 0}, 2, 2, S::dismissed, R::anad, "anad"},
             {{3, 1, 1, 1}, 2, 3, S::dismissed, R::anad, "anad"},
         }},
        {"5.07",
         {
             {{0, 0, 0}, 3, 1, S::dismissed, R::anad, "dnv"},
             {{3, 0, 0}, 7, 0, S::dismissed, R::anad, "dnv"},
         }},
        {"5.08",
         {
             {{0, 0, 0}, 3, 1, S::dismissed, R::anad, "dnv"},
             {{3, 0, 0}, 7, 0, S::dismissed, R::anad, "dnv"},
         }},
        {"5.09",
         {
             {{2, 0}, 4, 1, S::accepted, R::none, "accepted"},
         }},
        {"5.10",
         {
             {{0, 0, 0, 0}, 3, 1, S::dismissed, R::anad, "anad"},
             {{3, 0, 0, 0}, 7, 0, S::dismissed, R::anad, "anad"},
         }},
        {"5.11",
         {
             {{2, 0, 0}, 4, 1, S::dismissed, R::anad, "dnv"},
         }},
        {"5.12",
         {
             {{1, 0}, 5, 0, S::accepted, R::none, "accepted"},
         }},
        {"5.15",
         {
             {{1, 3, 0, 2, 3}, 2, 5, S::dismissed, R::anad, "anad"},
         }},
        {"5.18",
         {
             {{1, 0, 1, 0}, 3, 2, S::dismissed, R::anad, "anad"},
             {{4, 1, 2, 2}, 8, 1, S::dismissed, R::anad, "anad"},
         }},
        {"5.19",
         {
             {{1, 0, 1}, 2, 3, S::dismissed, R::dnv_order, "dnv"},
         }},
        {"5.20",
         {
             {{1, 1, 0, 0}, 3, 2, S::dismissed, R::anad, "anad"},
         }},
        {"5.21",
         {
             {{3, 2, 1}, 4, 3, S::accepted, R::none, "accepted"},
         }},
        {"5.22",
         {
             {{1, 2, 2, 0, 3, 3}, 2, 5, S::dismissed, R::anad, "anad"},
             {{1, 3, 3, 0, 3, 2}, 2, 5, S::dismissed, R::anad, "anad"},
         }},
        {"5.23",
         {
             {{1, 1, 1, 0, 0}, 3, 2, S::dismissed, R::anad, "anad"},
             {{1, 3, 2, 2, 2}, 3, 4, S::dismissed, R::anad, "anad"},
             {{4, 0, 3, 1, 2}, 7, 2, S::accepted, R::none, "accepted"},
             {{4, 1, 2, 0, 0}, 4, 3, S::dismissed, R::anad, "anad"},
             {{4, 2, 2, 1, 2}, 8, 1, S::dismissed, R::anad, "anad"},
         }},
        {"5.24",
         {
             {{0, 1, 0, 0, 0, 0, 0, 0}, 6, 0, S::dismissed, R::anad, "anad"},
             {{0, 1, 0, 0, 0, 0, 1, 0}, 5, 1, S::dismissed, R::anad, "anad"},
             {{0, 1, 1, 1, 1, 0, 0, 0}, 5, 1, S::dismissed, R::anad, "anad"},
             {{0, 1, 1, 1, 1, 1, 1, 1}, 4, 2, S::dismissed, R::anad, "anad"},
             {{0, 2, 0, 0, 0, 0, 0, 0}, 4, 2, S::dismissed, R::anad, "anad"},
             {{0, 2, 1, 1, 0, 0, 1, 1}, 8, 0, S::dismissed, R::anad, "anad"},
             {{0, 2, 1, 1, 0, 0, 2, 0}, 7, 1, S::dismissed, R::anad, "anad"},
             {{0, 3, 1, 1, 1, 1, 2, 2}, 10, 0, S::dismissed, R::anad, "anad"},
             {{0, 3, 2, 2, 2, 1, 2, 1}, 10, 0, S::dismissed, R::anad, "anad"},
             {{0, 3, 3, 1, 0, 0, 2, 0}, 5, 3, S::dismissed, R::anad, "anad"},
             {{0, 3, 3, 2, 0, 0, 3, 2}, 4, 4, S::dismissed, R::anad, "anad"},
             {{0, 4, 0, 0, 0, 0, 5, 0}, 13, 1, S::dismissed, R::anad, "anad"},
             {{0, 5, 5, 5, 4, 0, 0, 0}, 13, 1, S::dismissed, R::anad, "anad"},
         }},
        {"5.27",
         {
             {{1, 1, 0, 0, 1, 0, 1}, 2, 3, S::dismissed, R::anad, "anad"},
             {{1, 1, 1, 0, 1, 1, 0}, 2, 3, S::dismissed, R::anad, "anad"},
             {{2, 1, 1, 0, 0, 0, 0}, 3, 2, S::dismissed, R::anad, "anad"},
             {{4, 5, 5, 3, 2, 1, 3}, 2, 7, S::dismissed, R::anad, "anad"},
             {{5, 3, 1, 1, 2, 1, 1}, 6, 3, S::dismissed, R::anad, "anad"},
             {{5, 4, 1, 0, 2, 2, 1}, 5, 4, S::dismissed, R::anad, "anad"},
             {{5, 5, 0, 0, 2, 0, 4}, 7, 4, S::dismissed, R::anad, "anad"},
             {{5, 5, 4, 0, 4, 2, 0}, 7, 4, S::dismissed, R::anad, "anad"},
         }},
        {"5.28",
         {
             {{2, 0, 0, 0, 1, 0}, 2, 3, S::dismissed, R::anad, "anad"},
             {{2, 1, 1, 1, 0, 0}, 2, 3, S::dismissed, R::anad, "anad"},
             {{4, 1, 0, 0, 1, 1}, 8, 1, S::dismissed, R::anad, "anad"},
             {{4, 2, 2, 2, 4, 2}, 8, 3, S::dismissed, R::anad, "anad"},
             {{4, 4, 4, 4, 2, 2}, 8, 3, S::dismissed, R::anad, "anad"},
         }},
        {"5.29",
         {
             {{0, 0, 0, 0, 0}, 3, 2, S::dismissed, R::anad, "anad"},
             {{0, 1, 1, 1, 2}, 3, 4, S::dismissed, R::anad, "anad"},
             {{0, 2, 1, 2, 1}, 3, 4, S::dismissed, R::anad, "anad"},
             {{3, 1, 0, 1, 1}, 9, 0, S::dismissed, R::anad, "anad"},
             {{3, 1, 1, 0, 0}, 5, 2, S::dismissed, R::anad, "anad"},
         }},
        {"5.31",
         {
             {{0, 2, 1, 1, 2, 1}, 2, 4, S::dismissed, R::anad, "anad"},
             {{1, 0, 0, 0, 0, 0}, 4, 1, S::dismissed, R::anad, "anad"},
             {{1, 0, 1, 1, 1, 1}, 6, 1, S::dismissed, R::anad, "anad"},
             {{1, 0, 2, 1, 2, 1}, 4, 3, S::dismissed, R::anad, "anad"},
             {{1, 0, 5, 2, 4, 1}, 6, 5, S::dismissed, R::dnv_order, "dnv"},
             {{1, 1, 0, 0, 1, 0}, 7, 0, S::dismissed, R::anad, "anad"},
             {{1, 2, 0, 0, 2, 1}, 9, 0, S::dismissed, R::anad, "anad"},
             {{1, 2, 1, 0, 0, 0}, 6, 1, S::dismissed, R::anad, "anad"},
             {{3, 2, 0, 0, 3, 1}, 2, 5, S::dismissed, R::anad, "anad"},
         }},
        {"5.32",
         {
             {{0, 2, 0, 3, 3}, 5, 4, S::dismissed, R::anad, "anad"},
             {{1, 3, 2, 2, 2}, 2, 5, S::dismissed, R::anad, "anad"},
         }},
        {"5.35",
         {
             {{1, 0, 0, 1, 1, 1, 0}, 2, 3, S::dismissed, R::anad, "anad"},
             {{1, 1, 1, 0, 1, 1, 0}, 2, 3, S::dismissed, R::anad, "anad"},
             {{2, 0, 0, 1, 0, 0, 0}, 3, 2, S::dismissed, R::anad, "anad"},
             {{2, 1, 1, 0, 0, 0, 0}, 3, 2, S::dismissed, R::anad, "anad"},
             {{4, 3, 3, 5, 3, 2, 1}, 2, 7, S::dismissed, R::anad, "anad"},
             {{4, 5, 5, 3, 3, 2, 1}, 2, 7, S::dismissed, R::anad, "anad"},
             {{5, 2, 2, 3, 4, 1, 1}, 4, 5, S::dismissed, R::anad, "anad"},
             {{5, 3, 1, 1, 2, 1, 1}, 6, 3, S::dismissed, R::anad, "anad"},
             {{5, 3, 2, 2, 1, 1, 1}, 6, 3, S::dismissed, R::anad, "anad"},
             {{5, 3, 3, 2, 4, 1, 1}, 4, 5, S::dismissed, R::anad, "anad"},
             {{5, 4, 0, 1, 2, 2, 1}, 5, 4, S::dismissed, R::anad, "anad"},
             {{5, 5, 4, 0, 4, 2, 0}, 7, 4, S::dismissed, R::anad, "anad"},
         }},
        {"5.36",
         {
             {{2, 0, 0, 0, 1, 0}, 2, 3, S::dismissed, R::anad, "anad"},
             {{2, 1, 0, 1, 0, 0}, 2, 3, S::dismissed, R::anad, "anad"},
             {{4, 0, 0, 1, 1, 1}, 8, 1, S::dismissed, R::anad, "anad"},
             {{4, 1, 1, 0, 1, 1}, 8, 1, S::dismissed, R::anad, "anad"},
             {{4, 2, 2, 2, 4, 2}, 8, 3, S::dismissed, R::anad, "anad"},
             {{4, 4, 2, 4, 2, 2}, 8, 3, S::dismissed, R::anad, "anad"},
         }},
        {"5.37",
         {
             {{0, 0, 0, 0, 0}, 3, 2, S::dismissed, R::anad, "anad"},
             {{0, 2, 1, 2, 1}, 3, 4, S::dismissed, R::anad, "anad"},
             {{3, 0, 1, 0, 0}, 5, 2, S::dismissed, R::anad, "anad"},
             {{3, 0, 1, 1, 1}, 9, 0, S::dismissed, R::anad, "anad"},
         }},
        {"5.38",
         {
             {{0, 2, 2, 1, 1, 1}, 2, 4, S::dismissed, R::anad, "anad"},
             {{1, 0, 0, 0, 0, 0}, 4, 1, S::dismissed, R::anad, "anad"},
             {{1, 1, 1, 0, 0, 0}, 7, 0, S::dismissed, R::anad, "anad"},
             {{1, 1, 2, 0, 0, 0}, 5, 2, S::dismissed, R::anad, "anad"},
             {{1, 1, 2, 2, 2, 3}, 11, 0, S::dismissed, R::anad, "anad"},
             {{1, 2, 1, 1, 1, 1}, 5, 2, S::dismissed, R::anad, "anad"},
             {{1, 2, 2, 0, 0, 1}, 9, 0, S::dismissed, R::anad, "anad"},
         }},
        {"5.39",
         {
             {{0, 1, 0, 0, 0}, 7, 0, S::dismissed, R::anad, "anad"},
             {{0, 2, 1, 0, 1}, 9, 0, S::dismissed, R::anad, "anad"},
             {{0, 3, 1, 1, 2}, 11, 0, S::dismissed, R::anad, "anad"},
             {{1, 3, 1, 1, 1}, 2, 5, S::dismissed, R::anad, "anad"},
         }},
        {"5.13", {}},
        {"5.14", {}},
        {"5.16", {}},
        {"5.17", {}},
        {"5.25", {}},
        {"5.26", {}},
        {"5.30", {}},
        {"5.33", {}},
        {"5.34", {}},
    };
    return sets;
}

} // namespace corpus
