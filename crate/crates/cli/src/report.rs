use std::fmt::Write as _;

use cubesize::{AffineUnimodularMap, LatticePolytope, LatticeVector};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{Map, Number, Value};

use crate::CliError;

#[derive(Debug)]
pub struct Report {
    pub dim: usize,
    pub ls: BigInt,
    pub w: Option<BigInt>,
    pub w2: Option<BigInt>,
    pub map: AffineUnimodularMap,
    /// Image of the distinct input points, sorted.
    pub image: Vec<LatticeVector>,
    pub iterations: usize,
    pub oracle_agrees: Option<bool>,
    pub nodes: Option<u64>,
    pub inconclusive: Option<bool>,
    pub ms: f64,
}

pub fn image_points(p: &LatticePolytope, map: &AffineUnimodularMap) -> Vec<LatticeVector> {
    let mut image = p
        .deduped()
        .apply_map(map)
        .expect("map dimension matches")
        .points()
        .to_vec();
    image.sort_by(|a, b| a.coords().cmp(b.coords()));
    image
}

fn num(x: &BigInt) -> Value {
    Value::Number(
        x.to_string()
            .parse::<Number>()
            .expect("integers are valid numbers"),
    )
}

fn vector(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(num).collect())
}

impl Report {
    /// Refuses to emit a matrix that is not unimodular.
    pub fn check(&self) -> Result<(), CliError> {
        let det = self.map.matrix().determinant().map_err(CliError::Core)?;
        if det.abs() != BigInt::from(1) {
            return Err(CliError::Internal(format!(
                "certificate has determinant {det}"
            )));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut o = Map::new();
        o.insert("dim".into(), Value::from(self.dim));
        o.insert("ls".into(), num(&self.ls));
        if let Some(w) = &self.w {
            o.insert("w".into(), num(w));
        }
        if let Some(w2) = &self.w2 {
            o.insert("w2".into(), num(w2));
        }
        o.insert(
            "matrix".into(),
            Value::Array(self.map.matrix().rows().iter().map(|r| vector(r)).collect()),
        );
        o.insert(
            "translation".into(),
            vector(self.map.translation().coords()),
        );
        o.insert(
            "image".into(),
            Value::Array(self.image.iter().map(|p| vector(p.coords())).collect()),
        );
        o.insert("iterations".into(), Value::from(self.iterations));
        if let Some(a) = self.oracle_agrees {
            o.insert("oracle_agrees".into(), Value::from(a));
        }
        if let Some(n) = self.nodes {
            o.insert("nodes".into(), Value::from(n));
        }
        if let Some(i) = self.inconclusive {
            o.insert("inconclusive".into(), Value::from(i));
        }
        let ms: Number = format!("{:.3}", self.ms).parse().expect("decimal");
        o.insert("ms".into(), Value::Number(ms));
        Value::Object(o)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "dimension    {}", self.dim).unwrap();
        writeln!(s, "ls           {}", self.ls).unwrap();
        if let Some(w) = &self.w {
            writeln!(s, "w            {w}").unwrap();
        }
        if let Some(w2) = &self.w2 {
            writeln!(s, "w2           {w2}").unwrap();
        }
        writeln!(s, "matrix       {}", self.map.matrix()).unwrap();
        writeln!(s, "translation  {}", self.map.translation()).unwrap();
        let image: Vec<String> = self.image.iter().map(|p| p.to_string()).collect();
        writeln!(s, "image        {}", image.join(" ")).unwrap();
        writeln!(s, "iterations   {}", self.iterations).unwrap();
        if let Some(n) = self.nodes {
            writeln!(s, "nodes        {n}").unwrap();
        }
        if let Some(true) = self.inconclusive {
            writeln!(
                s,
                "result       inconclusive (budget exhausted, ls is an upper bound)"
            )
            .unwrap();
        }
        if let Some(a) = self.oracle_agrees {
            writeln!(s, "oracle       {}", if a { "agrees" } else { "DISAGREES" }).unwrap();
        }
        writeln!(s, "time         {:.3} ms", self.ms).unwrap();
        s
    }
}
