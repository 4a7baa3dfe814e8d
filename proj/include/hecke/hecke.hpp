#pragma once

#include <hecke/errors.hpp>
#include <hecke/laurent.hpp>
#include <hecke/prime_rat.hpp>
#include <hecke/xpoly.hpp>
#include <hecke/vseries.hpp>
#include <hecke/symmetric.hpp>
#include <hecke/hecke_expr.hpp>
#include <hecke/spherical.hpp>
#include <hecke/cosets.hpp>
#include <hecke/linsolve.hpp>
#include <hecke/series.hpp>
#include <hecke/render.hpp>
#include <hecke/serialize.hpp>
