//! Annual time-series containers, CSV ingestion, alignment, differencing,
//! and lag construction.
//!
//! All types are immutable after construction and all operations are pure,
//! so values can be shared freely across threads.

use crate::error::{CointError, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::path::Path;

/// One named annual series. Observation `t` belongs to year `start_year + t`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    pub name: String,
    pub start_year: i32,
    pub values: Vec<f64>,
}

impl TimeSeries {
    /// Builds a series. Panics if `values` is empty: an empty series is a
    /// programming error, while gaps in loaded data are reported as errors
    /// by [`load_csv`].
    pub fn new(name: impl Into<String>, start_year: i32, values: Vec<f64>) -> Self {
        assert!(!values.is_empty(), "a TimeSeries must hold at least one observation");
        TimeSeries { name: name.into(), start_year, values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-emptiness is a construction invariant
    }

    /// Last covered year (inclusive).
    pub fn end_year(&self) -> i32 {
        self.start_year + self.values.len() as i32 - 1
    }

    /// Restricts the series to `[first, last]` (inclusive). Panics if the
    /// window is not fully covered; callers go through [`Dataset::align`].
    fn window(&self, first: i32, last: i32) -> TimeSeries {
        assert!(first >= self.start_year && last <= self.end_year() && first <= last);
        let a = (first - self.start_year) as usize;
        let b = (last - self.start_year) as usize;
        TimeSeries::new(self.name.clone(), first, self.values[a..=b].to_vec())
    }

    /// `order`-th difference. The first difference maps `s[t]` to
    /// `s[t+1] - s[t]`, shortening the series by one and advancing
    /// `start_year` by one; higher orders iterate that map.
    ///
    /// ```
    /// use coint::series::TimeSeries;
    /// let s = TimeSeries::new("y", 1985, vec![1.0, 2.0, 4.0]);
    /// let d = s.difference(1).unwrap();
    /// assert_eq!(d.values, vec![1.0, 2.0]);
    /// assert_eq!(d.start_year, 1986);
    /// ```
    pub fn difference(&self, order: usize) -> Result<TimeSeries> {
        assert!(order >= 1, "difference order must be positive");
        if order >= self.len() {
            return Err(CointError::Length { op: "difference", requested: order, len: self.len() });
        }
        let mut v = self.values.clone();
        for _ in 0..order {
            v = v.windows(2).map(|w| w[1] - w[0]).collect();
        }
        let name =
            if order == 1 { format!("d_{}", self.name) } else { format!("d{}_{}", order, self.name) };
        Ok(TimeSeries::new(name, self.start_year + order as i32, v))
    }

    /// Backshift by `k` periods: entry `t` of the result is `s[t - k]`,
    /// aligned to the overlapping years, so the series shortens by `k`.
    ///
    /// ```
    /// use coint::series::TimeSeries;
    /// let s = TimeSeries::new("y", 1, vec![5.0, 6.0, 7.0]);
    /// let l = s.lag(1).unwrap();
    /// assert_eq!(l.values, vec![5.0, 6.0]);
    /// assert_eq!(l.start_year, 2);
    /// ```
    pub fn lag(&self, k: usize) -> Result<TimeSeries> {
        assert!(k >= 1, "lag must be positive");
        if k >= self.len() {
            return Err(CointError::Length { op: "lag", requested: k, len: self.len() });
        }
        let v = self.values[..self.len() - k].to_vec();
        Ok(TimeSeries::new(format!("{}_lag{}", self.name, k), self.start_year + k as i32, v))
    }

    /// Natural log of every observation; errors on the first value ≤ 0.
    pub fn ln(&self) -> Result<TimeSeries> {
        for (t, &v) in self.values.iter().enumerate() {
            if v <= 0.0 {
                return Err(CointError::LogDomain {
                    series: self.name.clone(),
                    year: self.start_year + t as i32,
                });
            }
        }
        let v = self.values.iter().map(|x| x.ln()).collect();
        Ok(TimeSeries::new(format!("ln_{}", self.name), self.start_year, v))
    }
}

/// Column-aligned collection of series with a common sample window.
///
/// `sample` is the intersection of the member year ranges; it is computed
/// at construction, which is also where an empty intersection is rejected.
/// [`Dataset::align`] trims every member to exactly that window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    series: Vec<TimeSeries>,
    sample: (i32, i32),
}

impl Dataset {
    /// Collects series into a dataset. Errors: duplicate names
    /// (configuration) or an empty year intersection (`NoOverlap`).
    pub fn new(series: Vec<TimeSeries>) -> Result<Dataset> {
        if series.is_empty() {
            return Err(CointError::Config { message: "dataset needs at least one series".into() });
        }
        let mut seen = HashSet::new();
        for s in &series {
            if !seen.insert(s.name.as_str()) {
                return Err(CointError::Config {
                    message: format!("duplicate series name '{}'", s.name),
                });
            }
        }
        let first = series.iter().map(|s| s.start_year).max().unwrap();
        let last = series.iter().map(|s| s.end_year()).min().unwrap();
        if first > last {
            return Err(CointError::NoOverlap);
        }
        Ok(Dataset { series, sample: (first, last) })
    }

    pub fn series(&self) -> &[TimeSeries] {
        &self.series
    }

    /// Common sample window `(first_year, last_year)`.
    pub fn sample(&self) -> (i32, i32) {
        self.sample
    }

    /// Number of member series.
    pub fn k(&self) -> usize {
        self.series.len()
    }

    /// Number of observations per series once aligned.
    pub fn nobs(&self) -> usize {
        (self.sample.1 - self.sample.0 + 1) as usize
    }

    pub fn names(&self) -> Vec<&str> {
        self.series.iter().map(|s| s.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&TimeSeries> {
        self.series.iter().find(|s| s.name == name)
    }

    /// Trims every member series to the common window. Idempotent.
    pub fn align(&self) -> Dataset {
        let (first, last) = self.sample;
        let series = self.series.iter().map(|s| s.window(first, last)).collect();
        Dataset { series, sample: (first, last) }
    }

    /// Reorders/subsets columns by name; errors on an unknown name.
    pub fn select(&self, names: &[String]) -> Result<Dataset> {
        let mut out = Vec::with_capacity(names.len());
        for n in names {
            match self.get(n) {
                Some(s) => out.push(s.clone()),
                None => return Err(CointError::MissingColumn { column: n.clone() }),
            }
        }
        Dataset::new(out)
    }

    /// Aligned observations as columns, one `Vec` per series.
    pub fn columns(&self) -> Vec<Vec<f64>> {
        let a = self.align();
        a.series.into_iter().map(|s| s.values).collect()
    }
}

/// CSV ingestion options. `value_columns` empty means every non-year column.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LoadOptions {
    pub delimiter: u8,
    pub decimal_separator: char,
    /// Header name of the year column; defaults to the first column.
    pub year_column: Option<String>,
    pub value_columns: Vec<String>,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions {
            delimiter: b',',
            decimal_separator: '.',
            year_column: None,
            value_columns: Vec::new(),
        }
    }
}

fn parse_value(raw: &str, decimal_separator: char) -> Option<f64> {
    let s = raw.trim();
    if s.is_empty() {
        return None;
    }
    // Reject the opposite separator outright: "1.234,5"-style thousand
    // grouping is ambiguous and must fail loudly rather than parse as 1.234.
    match decimal_separator {
        '.' => {
            if s.contains(',') {
                return None;
            }
            s.parse().ok()
        }
        _ => {
            if s.contains('.') {
                return None;
            }
            s.replace(decimal_separator, ".").parse().ok()
        }
    }
}

/// Reads a header-rowed CSV of one year column plus value columns into a
/// [`Dataset`]. Years must increase strictly by one; empty cells are hard
/// errors, never interpolated.
pub fn load_csv(path: impl AsRef<Path>, options: &LoadOptions) -> Result<Dataset> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(options.delimiter)
        .has_headers(true)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_path(path.as_ref())
        .map_err(|e| match e.kind() {
            csv::ErrorKind::Io(_) => CointError::Io(std::io::Error::new(
                std::io::ErrorKind::NotFound,
                format!("cannot open {}", path.as_ref().display()),
            )),
            _ => CointError::Parse { row: 0, column: "<header>".into(), value: e.to_string() },
        })?;

    let headers: Vec<String> = reader
        .headers()
        .map_err(|e| CointError::Parse { row: 0, column: "<header>".into(), value: e.to_string() })?
        .iter()
        .map(|h| h.trim().to_string())
        .collect();
    if headers.is_empty() {
        return Err(CointError::Parse {
            row: 0,
            column: "<header>".into(),
            value: "empty header row".into(),
        });
    }

    let year_name = match &options.year_column {
        Some(n) => n.clone(),
        None => headers[0].clone(),
    };
    let year_idx = headers
        .iter()
        .position(|h| *h == year_name)
        .ok_or_else(|| CointError::MissingColumn { column: year_name.clone() })?;

    let value_names: Vec<String> = if options.value_columns.is_empty() {
        headers.iter().enumerate().filter(|(i, _)| *i != year_idx).map(|(_, h)| h.clone()).collect()
    } else {
        options.value_columns.clone()
    };
    let mut value_idx = Vec::with_capacity(value_names.len());
    for n in &value_names {
        let idx = headers
            .iter()
            .position(|h| h == n)
            .ok_or_else(|| CointError::MissingColumn { column: n.clone() })?;
        value_idx.push(idx);
    }
    if value_idx.is_empty() {
        return Err(CointError::Config { message: "no value columns in input".into() });
    }

    let mut years: Vec<i32> = Vec::new();
    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); value_idx.len()];
    for (i, record) in reader.records().enumerate() {
        let row = i + 1; // 1-based data row for messages
        let record = record.map_err(|e| CointError::Parse {
            row,
            column: "<record>".into(),
            value: e.to_string(),
        })?;
        let year_raw = record.get(year_idx).unwrap_or("").trim();
        let year: i32 = year_raw.parse().map_err(|_| CointError::Parse {
            row,
            column: year_name.clone(),
            value: year_raw.to_string(),
        })?;
        if let Some(&prev) = years.last() {
            if year != prev + 1 {
                return Err(CointError::Order { row, expected: prev + 1, found: year });
            }
        }
        for (c, &idx) in value_idx.iter().enumerate() {
            let raw = record.get(idx).unwrap_or("").trim();
            if raw.is_empty() {
                return Err(CointError::Gap { year, column: value_names[c].clone() });
            }
            let v = parse_value(raw, options.decimal_separator).ok_or_else(|| {
                CointError::Parse { row, column: value_names[c].clone(), value: raw.to_string() }
            })?;
            columns[c].push(v);
        }
        years.push(year);
    }
    if years.is_empty() {
        return Err(CointError::SampleTooSmall { nobs: 0, min: 1 });
    }

    let start = years[0];
    let series = value_names
        .into_iter()
        .zip(columns)
        .map(|(name, values)| TimeSeries::new(name, start, values))
        .collect();
    Dataset::new(series)
}

/// Writes an aligned dataset back to CSV with full-precision values
/// (shortest representation that round-trips exactly).
pub fn write_csv(ds: &Dataset, path: impl AsRef<Path>, options: &LoadOptions) -> Result<()> {
    let ds = ds.align();
    let mut w = csv::WriterBuilder::new()
        .delimiter(options.delimiter)
        .from_path(path.as_ref())
        .map_err(io_from_csv)?;
    let year_name = options.year_column.clone().unwrap_or_else(|| "year".into());
    let mut header = vec![year_name];
    header.extend(ds.names().iter().map(|s| s.to_string()));
    w.write_record(&header).map_err(io_from_csv)?;
    let (first, _) = ds.sample();
    for t in 0..ds.nobs() {
        let mut rec = vec![(first + t as i32).to_string()];
        for s in ds.series() {
            let cell = format!("{}", s.values[t]);
            rec.push(match options.decimal_separator {
                '.' => cell,
                sep => cell.replace('.', &sep.to_string()),
            });
        }
        w.write_record(&rec).map_err(io_from_csv)?;
    }
    w.flush()?;
    Ok(())
}

fn io_from_csv(e: csv::Error) -> CointError {
    CointError::Io(std::io::Error::other(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        use std::io::Write;
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn load_minimal_two_row_file() {
        let f = write_temp("year,m2\n1985,10.0\n1986,11.0\n");
        let ds = load_csv(f.path(), &LoadOptions::default()).unwrap();
        assert_eq!(ds.k(), 1);
        assert_eq!(ds.sample(), (1985, 1986));
        assert_eq!(ds.get("m2").unwrap().values, vec![10.0, 11.0]);
    }

    #[test]
    fn load_applies_comma_decimal_separator() {
        let f = write_temp("year;x\n1985;2,5\n1986;3,0\n");
        let opts = LoadOptions { delimiter: b';', decimal_separator: ',', ..Default::default() };
        let ds = load_csv(f.path(), &opts).unwrap();
        assert_eq!(ds.get("x").unwrap().values[0], 2.5);
    }

    #[test]
    fn load_comma_decimal_rejects_dot_cells() {
        let f = write_temp("year;x\n1985;2.5\n");
        let opts = LoadOptions { delimiter: b';', decimal_separator: ',', ..Default::default() };
        match load_csv(f.path(), &opts) {
            Err(CointError::Parse { row: 1, column, .. }) => assert_eq!(column, "x"),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn load_full_sample_shape() {
        let mut body = String::from("year,a,b,c\n");
        for (i, y) in (1985..=2022).enumerate() {
            body.push_str(&format!("{y},{},{},{}\n", i as f64, i as f64 * 2.0, i as f64 - 3.0));
        }
        let f = write_temp(&body);
        let ds = load_csv(f.path(), &LoadOptions::default()).unwrap();
        assert_eq!(ds.k(), 3);
        assert_eq!(ds.sample(), (1985, 2022));
        for s in ds.series() {
            assert_eq!(s.len(), 38);
        }
    }

    #[test]
    fn load_reports_gap_with_year_and_column() {
        let f = write_temp("year,a,b\n1985,1.0,2.0\n1986,,3.0\n");
        match load_csv(f.path(), &LoadOptions::default()) {
            Err(CointError::Gap { year, column }) => {
                assert_eq!(year, 1986);
                assert_eq!(column, "a");
            }
            other => panic!("expected gap error, got {other:?}"),
        }
    }

    #[test]
    fn load_rejects_non_monotone_years() {
        let f = write_temp("year,a\n1985,1.0\n1987,2.0\n");
        match load_csv(f.path(), &LoadOptions::default()) {
            Err(CointError::Order { row, expected, found }) => {
                assert_eq!((row, expected, found), (2, 1986, 1987));
            }
            other => panic!("expected order error, got {other:?}"),
        }
    }

    #[test]
    fn load_reports_parse_position() {
        let f = write_temp("year,a\n1985,xyz\n");
        match load_csv(f.path(), &LoadOptions::default()) {
            Err(CointError::Parse { row, column, value }) => {
                assert_eq!((row, column.as_str(), value.as_str()), (1, "a", "xyz"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn load_missing_value_column_is_config_error() {
        let f = write_temp("year,a\n1985,1.0\n");
        let opts = LoadOptions { value_columns: vec!["nope".into()], ..Default::default() };
        match load_csv(f.path(), &opts) {
            Err(e @ CointError::MissingColumn { .. }) => assert_eq!(e.exit_code(), 2),
            other => panic!("expected missing column, got {other:?}"),
        }
    }

    #[test]
    fn difference_first_order() {
        let s = TimeSeries::new("y", 1985, vec![1.0, 2.0, 4.0]);
        let d = s.difference(1).unwrap();
        assert_eq!(d.values, vec![1.0, 2.0]);
        assert_eq!(d.start_year, 1986);
    }

    #[test]
    fn difference_of_constant_is_zero() {
        let s = TimeSeries::new("y", 2000, vec![3.0; 6]);
        assert!(s.difference(1).unwrap().values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn difference_second_order_by_hand() {
        let s = TimeSeries::new("y", 1985, vec![1.0, 2.0, 4.0, 7.0]);
        let d = s.difference(2).unwrap();
        assert_eq!(d.values, vec![1.0, 1.0]);
        assert_eq!(d.start_year, 1987);
    }

    #[test]
    fn difference_order_too_large_errors() {
        let s = TimeSeries::new("y", 1985, vec![1.0, 2.0]);
        assert!(matches!(s.difference(2), Err(CointError::Length { .. })));
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn difference_order_zero_is_a_contract_violation() {
        let _ = TimeSeries::new("y", 1985, vec![1.0, 2.0]).difference(0);
    }

    #[test]
    fn lag_shifts_years_forward() {
        let s = TimeSeries::new("y", 1, vec![5.0, 6.0, 7.0]);
        let l = s.lag(1).unwrap();
        assert_eq!(l.values, vec![5.0, 6.0]);
        assert_eq!(l.start_year, 2);
    }

    #[test]
    fn lag_two_by_hand() {
        let s = TimeSeries::new("y", 1, vec![1.0, 2.0, 3.0, 4.0]);
        let l = s.lag(2).unwrap();
        assert_eq!(l.values, vec![1.0, 2.0]);
        assert_eq!((l.start_year, l.end_year()), (3, 4));
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn lag_zero_is_a_contract_violation() {
        let _ = TimeSeries::new("y", 1, vec![1.0, 2.0]).lag(0);
    }

    #[test]
    fn lag_longer_than_series_errors() {
        let s = TimeSeries::new("y", 1, vec![1.0, 2.0]);
        assert!(matches!(s.lag(5), Err(CointError::Length { .. })));
    }

    #[test]
    fn align_trims_to_intersection() {
        let a = TimeSeries::new("a", 1985, (0..38).map(f64::from).collect());
        let b = TimeSeries::new("b", 1990, (0..33).map(f64::from).collect());
        let ds = Dataset::new(vec![a, b]).unwrap().align();
        assert_eq!(ds.sample(), (1990, 2022));
        for s in ds.series() {
            assert_eq!((s.start_year, s.end_year()), (1990, 2022));
        }
    }

    #[test]
    fn align_identity_on_equal_ranges() {
        let a = TimeSeries::new("a", 2000, vec![1.0, 2.0]);
        let b = TimeSeries::new("b", 2000, vec![3.0, 4.0]);
        let ds = Dataset::new(vec![a, b]).unwrap();
        assert_eq!(ds.align(), ds);
    }

    #[test]
    fn align_three_staggered_series() {
        let a = TimeSeries::new("a", 1985, (0..30).map(f64::from).collect());
        let b = TimeSeries::new("b", 1990, (0..30).map(f64::from).collect());
        let c = TimeSeries::new("c", 1980, (0..30).map(f64::from).collect());
        let ds = Dataset::new(vec![a, b, c]).unwrap().align();
        // latest start 1990, earliest end 1980+29=2009
        assert_eq!(ds.sample(), (1990, 2009));
    }

    #[test]
    fn align_is_idempotent() {
        let a = TimeSeries::new("a", 1985, (0..10).map(f64::from).collect());
        let b = TimeSeries::new("b", 1988, (0..10).map(f64::from).collect());
        let ds = Dataset::new(vec![a, b]).unwrap();
        assert_eq!(ds.align().align(), ds.align());
    }

    #[test]
    fn empty_intersection_is_no_overlap() {
        let a = TimeSeries::new("a", 1985, vec![1.0, 2.0]);
        let b = TimeSeries::new("b", 2000, vec![1.0, 2.0]);
        assert!(matches!(Dataset::new(vec![a, b]), Err(CointError::NoOverlap)));
    }

    #[test]
    fn duplicate_names_rejected() {
        let a = TimeSeries::new("a", 1985, vec![1.0, 2.0]);
        let b = TimeSeries::new("a", 1985, vec![3.0, 4.0]);
        assert!(matches!(Dataset::new(vec![a, b]), Err(CointError::Config { .. })));
    }

    #[test]
    fn csv_round_trip_is_identity() {
        let vals = vec![1.25, -3.5e6, 0.3333333333333333, 42.0];
        let s = TimeSeries::new("x", 1990, vals.clone());
        let ds = Dataset::new(vec![s]).unwrap();
        let f = tempfile::NamedTempFile::new().unwrap();
        write_csv(&ds, f.path(), &LoadOptions::default()).unwrap();
        let back = load_csv(f.path(), &LoadOptions::default()).unwrap();
        assert_eq!(back.get("x").unwrap().values, vals);
        assert_eq!(back.sample(), (1990, 1993));
    }

    #[test]
    fn ln_rejects_non_positive_values() {
        let s = TimeSeries::new("x", 2000, vec![1.0, 0.0]);
        match s.ln() {
            Err(CointError::LogDomain { year, .. }) => assert_eq!(year, 2001),
            other => panic!("expected log domain error, got {other:?}"),
        }
    }

    proptest! {
        /// Cumulative-summing a first difference from s[0] reproduces s.
        #[test]
        fn difference_then_cumsum_reconstructs(values in proptest::collection::vec(-1e6f64..1e6, 2..60)) {
            let s = TimeSeries::new("y", 1985, values.clone());
            let d = s.difference(1).unwrap();
            let mut rebuilt = vec![values[0]];
            for dv in &d.values {
                rebuilt.push(rebuilt.last().unwrap() + dv);
            }
            // relative to the series scale: partial sums accumulate ulps of
            // the largest magnitude seen, not of each individual entry
            let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
            for (orig, re) in values.iter().zip(&rebuilt) {
                prop_assert!((orig - re).abs() <= 1e-12 * scale);
            }
        }

        #[test]
        fn lag_then_length_matches(k in 1usize..5, n in 6usize..40) {
            let s = TimeSeries::new("y", 1985, (0..n).map(|i| i as f64).collect());
            let l = s.lag(k).unwrap();
            prop_assert_eq!(l.len(), n - k);
            prop_assert_eq!(l.start_year, 1985 + k as i32);
            prop_assert_eq!(l.values[0], 0.0);
        }
    }
}
