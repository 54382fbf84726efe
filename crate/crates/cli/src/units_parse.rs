//! Parsing of suffixed physical quantities from the command line.

/// Parse a separation like `1um`, `2.5e-9m`, `350nm` into meters.
pub fn parse_separation(s: &str) -> Result<f64, String> {
    let (value, unit) = split_suffix(s)?;
    let scale = match unit {
        "m" => 1.0,
        "cm" => 1e-2,
        "mm" => 1e-3,
        "um" | "µm" => 1e-6,
        "nm" => 1e-9,
        "pm" => 1e-12,
        "" => {
            return Err(format!(
                "separation '{s}' needs a unit suffix (m, cm, mm, um, nm, pm)"
            ))
        }
        other => return Err(format!("unknown separation unit '{other}'")),
    };
    let meters = value * scale;
    if meters.is_nan() || meters <= 0.0 {
        return Err(format!("separation must be positive, got {s}"));
    }
    Ok(meters)
}

/// Parse a mass like `9.1e-31kg`, `0.511MeV`, `1eV` into kilograms
/// (electronvolt units are read as eV/c^2).
pub fn parse_mass(s: &str) -> Result<f64, String> {
    let (value, unit) = split_suffix(s)?;
    let kg = match unit {
        "kg" => value,
        "g" => value * 1e-3,
        "eV" | "ev" => value * casimir_core::units::EV_PER_C2_KG,
        "keV" | "kev" => value * 1e3 * casimir_core::units::EV_PER_C2_KG,
        "MeV" | "mev" => value * 1e6 * casimir_core::units::EV_PER_C2_KG,
        "GeV" | "gev" => value * 1e9 * casimir_core::units::EV_PER_C2_KG,
        "" => {
            return Err(format!(
                "mass '{s}' needs a unit suffix (kg, g, eV, keV, MeV, GeV)"
            ))
        }
        other => return Err(format!("unknown mass unit '{other}'")),
    };
    if kg < 0.0 {
        return Err(format!("mass must be non-negative, got {s}"));
    }
    Ok(kg)
}

/// Split `<number><suffix>` at the last character that can belong to a
/// number (digits, sign, dot, exponent).
fn split_suffix(s: &str) -> Result<(f64, &str), String> {
    let s = s.trim();
    let bytes = s.as_bytes();
    let mut idx = s.len();
    for (i, &b) in bytes.iter().enumerate() {
        let numeric =
            b.is_ascii_digit() || b == b'.' || b == b'+' || b == b'-' || b == b'e' || b == b'E';
        // an 'e'/'E' only stays numeric if a digit or sign follows
        if numeric {
            if (b == b'e' || b == b'E')
                && !bytes
                    .get(i + 1)
                    .is_some_and(|&n| n.is_ascii_digit() || n == b'+' || n == b'-')
            {
                idx = i;
                break;
            }
        } else {
            idx = i;
            break;
        }
    }
    let (num, unit) = s.split_at(idx);
    let value: f64 = num
        .parse()
        .map_err(|_| format!("cannot parse number in '{s}'"))?;
    Ok((value, unit.trim()))
}
