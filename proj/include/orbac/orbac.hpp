#pragma once

/// @file orbac.hpp
/// @brief Umbrella header for the full library.

#include <orbac/rootsys.hpp>
#include <orbac/elements.hpp>
#include <orbac/characterize.hpp>
#include <orbac/wright.hpp>
#include <orbac/oracle.hpp>
#include <orbac/serialize.hpp>
