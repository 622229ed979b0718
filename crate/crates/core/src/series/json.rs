//! Exact JSON wire form of rational series:
//! `{ "valuation": int, "truncation": int, "coeffs": ["num/den", ...] }`.
//!
//! `coeffs` lists exponents `valuation .. truncation - 1`. A series that
//! vanishes to its truncation order has `valuation == truncation` and no
//! coefficients.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exact::Rational;
use crate::series::{PuiseuxSeries, QSeries};

#[derive(Serialize, Deserialize)]
struct SeriesWire {
    valuation: i64,
    truncation: i64,
    coeffs: Vec<String>,
}

impl Serialize for QSeries<Rational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesWire {
            valuation: self.valuation().unwrap_or(self.prec()),
            truncation: self.prec(),
            coeffs: self
                .raw_coeffs()
                .iter()
                .map(Rational::to_fraction_string)
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QSeries<Rational> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = SeriesWire::deserialize(deserializer)?;
        if wire.valuation + wire.coeffs.len() as i64 > wire.truncation {
            return Err(serde::de::Error::custom(
                "more coefficients than the truncation allows",
            ));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|c| c.parse::<Rational>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QSeries::new(wire.valuation, coeffs, wire.truncation))
    }
}

#[derive(Serialize)]
struct PuiseuxWire<'a> {
    scalar: String,
    offset: String,
    unit: &'a QSeries<Rational>,
}

impl Serialize for PuiseuxSeries<Rational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PuiseuxWire {
            scalar: self.scalar().to_fraction_string(),
            offset: self.offset().to_fraction_string(),
            unit: self.unit(),
        }
        .serialize(serializer)
    }
}
