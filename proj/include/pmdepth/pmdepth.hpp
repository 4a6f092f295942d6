#ifndef PMDEPTH_PMDEPTH_HPP
#define PMDEPTH_PMDEPTH_HPP

#include "pmdepth/bruhat.hpp"
#include "pmdepth/core.hpp"
#include "pmdepth/enumerate.hpp"
#include "pmdepth/error.hpp"
#include "pmdepth/io.hpp"
#include "pmdepth/qpoly.hpp"
#include "pmdepth/render.hpp"
#include "pmdepth/stats.hpp"
#include "pmdepth/symmetry.hpp"
#include "pmdepth/verify.hpp"

#endif  // PMDEPTH_PMDEPTH_HPP
