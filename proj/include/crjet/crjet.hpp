#pragma once

#include "crjet/error.hpp"
#include "crjet/rational.hpp"
#include "crjet/gaussian.hpp"
#include "crjet/linalg.hpp"
#include "crjet/poly.hpp"
#include "crjet/vector_field.hpp"
#include "crjet/model.hpp"
#include "crjet/prolong.hpp"
#include "crjet/realize.hpp"
#include "crjet/verify.hpp"
#include "crjet/catalog.hpp"
