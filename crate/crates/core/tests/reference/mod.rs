//! Published coefficient tables, transcribed digit for digit.
//!
//! Each entry is `(re, im)` as printed. The p = 5 and p = 10 tables are
//! rounded to 19 and 31 significant digits; the p = 8 constants carry 21 or
//! 22 digits and are truncated rather than rounded.

#![allow(dead_code)]

pub struct Table {
    pub p: usize,
    /// `omega_0 .. omega_p`
    pub omega: &'static [(&'static str, &'static str)],
    /// `lambda_1 .. lambda_p`
    pub lambda: &'static [(&'static str, &'static str)],
}

pub const P5: Table = Table {
    p: 5,
    omega: &[
        ("2.354383173482941501e-1", "3.295537698903362209e-2"),
        ("1.737747054311600606e-1", "5.726284240637533629e-2"),
        ("5.708483151712981717e-2", "5.367826163392843596e-2"),
        ("5.455260017239278090e-3", "1.692893836426674071e-2"),
        ("-4.138943380524367182e-4", "2.034356935140766843e-3"),
        ("-6.653714335968984044e-5", "6.462574635932469471e-5"),
    ],
    lambda: &[
        ("1.881852180702220422e-1", "-1.449755745395875068e-1"),
        ("3.717705006684543749e-1", "-3.020416160270775712e-1"),
        ("5.604567753443639984e-1", "-4.801938441334826040e-1"),
        ("7.672689586414600920e-1", "-6.821905910209796031e-1"),
        ("1.010783983564685329", "-9.231734623461863512e-1"),
    ],
};

pub const P10: Table = Table {
    p: 10,
    omega: &[
        ("1.746071737157674980979293520809e-1", "2.131147093009280730611467019158e-2"),
        ("1.490803915553910597329354639778e-1", "3.499836079601156948133789078972e-2"),
        ("8.492465921092508217336004148263e-2", "4.854991766416009886502556092917e-2"),
        ("2.794492162555768303150174880103e-2", "3.428439466181300925395192520791e-2"),
        ("4.612090699061725829646273271703e-3", "1.373142646307427391022925045066e-2"),
        ("-3.895212927973588318860893961158e-5", "3.550886924259579942806268192521e-3"),
        ("-2.151575611923250640729364801406e-4", "6.084356024918800989143391852680e-4"),
        ("-5.199488450834904743451274940186e-5", "6.406830664562431793000193930144e-5"),
        ("-5.856003331642731075366848061989e-6", "3.353733365341979352981823198386e-6"),
        ("-2.945578758160111306783176275407e-7", "3.154278990732981364449273807939e-8"),
        ("-4.219551146037265608639695765718e-9", "-1.752142489214440816303376939714e-9"),
    ],
    lambda: &[
        ("1.379409313309054508271675868217e-1", "-1.088692797924869220391271752962e-1"),
        ("2.732463550335757861584970430657e-1", "-2.210503737259508831029856904771e-1"),
        ("4.070334053056538299722767959949e-1", "-3.400869979247635282520012627532e-1"),
        ("5.429713841237013800653833464349e-1", "-4.668200118355472525024744280421e-1"),
        ("6.834620082884849199273619613380e-1", "-6.002854340275813175341293481950e-1"),
        ("8.297493681957483741659306681846e-1", "-7.404377940784227473659159034325e-1"),
        ("9.835018784062355446404273245147e-1", "-8.888012731779453622778359704903e-1"),
        ("1.147933282145432947538394279481", "-1.048670473139049661794532732170"),
        ("1.329633190044527778848402344442", "-1.226639730249438411182742778670"),
        ("1.545989175497797759478691005072", "-1.440017038829556195286509733096"),
    ],
};

pub const P8: Table = Table {
    p: 8,
    omega: &[
        ("1.926019633029103199063e-1", "2.472986965795651842299e-2"),
        ("1.582954327321094104502e-1", "4.149113569204600502105e-2"),
        ("7.826728293587305110862e-2", "5.215518667623989653254e-2"),
        ("1.940595049247490540621e-2", "2.977286598777633378610e-2"),
        ("1.691184771902755036966e-3", "8.938933548999206800196e-3"),
        ("-2.994777986686168319731e-4", "1.567541981830224487301e-3"),
        ("-9.837202592542590210980e-5", "1.502108057352792742070e-4"),
        ("-9.346989286415688998740e-6", "5.793852209955845432028e-6"),
        ("-2.451577304299235983015e-7", "6.134784898751456953524e-9"),
    ],
    lambda: &[
        ("0.152845417613666702426", "-0.119440685603870510384"),
        ("0.302346225128945757427", "-0.243989695504400621268"),
        ("0.451119584531782942888", "-0.378479770209444563858"),
        ("0.604563710297226464637", "-0.523486888629095259770"),
        ("0.765965706759629396959", "-0.678405572413543444272"),
        ("0.938371150977889047740", "-0.845332361280975174880"),
        ("1.128148837845288402558", "-1.030737947568157685685"),
        ("1.353030558654668162533", "-1.252503278108132307164"),
    ],
};

impl Table {
    /// The table as a coefficient file with `digits` in its header.
    pub fn to_coeff_file(&self, digits: u32) -> String {
        let mut s = format!("zetaquad-coeffs 1\np {}\ndigits {digits}\n", self.p);
        s += &format!("omega0 {} {}\n", self.omega[0].0, self.omega[0].1);
        for (j, (re, im)) in self.omega.iter().enumerate().skip(1) {
            s += &format!("omega {j} {re} {im}\n");
        }
        for (j, (re, im)) in self.lambda.iter().enumerate() {
            s += &format!("lambda {} {re} {im}\n", j + 1);
        }
        s
    }

    /// Every printed number with a label, in file order.
    pub fn entries(&self) -> Vec<(String, &'static str)> {
        let mut out = Vec::new();
        for (j, (re, im)) in self.omega.iter().enumerate() {
            out.push((format!("omega {j} re"), *re));
            out.push((format!("omega {j} im"), *im));
        }
        for (j, (re, im)) in self.lambda.iter().enumerate() {
            out.push((format!("lambda {} re", j + 1), *re));
            out.push((format!("lambda {} im", j + 1), *im));
        }
        out
    }
}

/// Significant digits of a printed decimal.
pub fn significant_digits(printed: &str) -> usize {
    let mantissa = printed.split(['e', 'E']).next().unwrap_or("");
    mantissa
        .chars()
        .filter(|c| c.is_ascii_digit())
        .skip_while(|c| *c == '0')
        .count()
}

/// `value` cut (not rounded) to `n` significant digits, in scientific form.
pub fn truncate_sci(value_sci: &str, n: usize) -> String {
    let (mantissa, exp) = value_sci.split_once('e').unwrap_or((value_sci, "0"));
    let neg = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).take(n).collect();
    let (lead, rest) = digits.split_at(1);
    format!("{}{lead}.{rest}e{exp}", if neg { "-" } else { "" })
}
