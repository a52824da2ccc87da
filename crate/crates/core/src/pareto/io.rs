//! CSV and JSON export of fronts.
//!
//! CSV columns are `x, y, z, objective_0 .. objective_{M-1}, reach_violation,
//! preference_violation`. Floats are written in shortest round-trip form.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use super::front::ParetoFront;
use crate::ergonomics::{Candidate, ObjectiveVector, Vec3};
use crate::error::{Error, Result};

pub fn csv_header(objective_count: usize) -> Vec<String> {
    let mut header: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
    header.extend((0..objective_count).map(|m| format!("objective_{m}")));
    header.push("reach_violation".into());
    header.push("preference_violation".into());
    header
}

pub fn write_csv<W: Write>(front: &ParetoFront, writer: W) -> Result<()> {
    write_candidates_csv(front.members(), front.objective_count(), writer)
}

pub fn write_candidates_csv<W: Write>(
    candidates: &[Candidate],
    objective_count: usize,
    writer: W,
) -> Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record(csv_header(objective_count))?;
    for c in candidates {
        let p = c.position;
        let row = [p.x, p.y, p.z]
            .into_iter()
            .chain(c.objectives.iter().copied())
            .chain([c.reach_violation, c.preference_violation])
            .map(|v| v.to_string());
        out.write_record(row)?;
    }
    out.flush().map_err(|e| Error::io("<csv writer>", e))?;
    Ok(())
}

pub fn read_csv<R: Read>(reader: R) -> Result<ParetoFront> {
    let mut input = csv::Reader::from_reader(reader);
    let columns = input.headers()?.len();
    if columns < 5 {
        return Err(Error::validation("csv", format!("expected at least 5 columns, got {columns}")));
    }
    let objective_count = columns - 5;
    let mut members = Vec::new();
    for (line, record) in input.records().enumerate() {
        let record = record?;
        let values = record
            .iter()
            .map(str::parse::<f64>)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::validation(format!("csv row {}", line + 1), e.to_string()))?;
        members.push(Candidate {
            position: Vec3::new(values[0], values[1], values[2]),
            objectives: ObjectiveVector(values[3..3 + objective_count].to_vec()),
            reach_violation: values[3 + objective_count],
            preference_violation: values[4 + objective_count],
        });
    }
    Ok(ParetoFront::from_members(members))
}

pub fn save_csv(front: &ParetoFront, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_csv(front, std::io::BufWriter::new(file))
}

pub fn load_csv(path: &Path) -> Result<ParetoFront> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_csv(std::io::BufReader::new(file))
}
