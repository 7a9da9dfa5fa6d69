#pragma once

#include <bch/bicomplex.hpp>
#include <bch/errors.hpp>
#include <bch/horadam.hpp>
#include <bch/identities.hpp>
#include <bch/params.hpp>
#include <bch/quad_ext.hpp>
#include <bch/rational.hpp>
#include <bch/serialize.hpp>
