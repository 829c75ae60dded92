//! Calendar facets of a timestamp: weekday, period of day, month, all in UTC.
//!
//! The day splits into four fixed periods: Night 00:00-05:59, Morning
//! 06:00-11:59, Afternoon 12:00-17:59, Evening 18:00-23:59.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DayOfWeek {
    Monday,
    Tuesday,
    Wednesday,
    Thursday,
    Friday,
    Saturday,
    Sunday,
}

impl DayOfWeek {
    const ALL: [DayOfWeek; 7] = [
        DayOfWeek::Monday,
        DayOfWeek::Tuesday,
        DayOfWeek::Wednesday,
        DayOfWeek::Thursday,
        DayOfWeek::Friday,
        DayOfWeek::Saturday,
        DayOfWeek::Sunday,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            DayOfWeek::Monday => "Monday",
            DayOfWeek::Tuesday => "Tuesday",
            DayOfWeek::Wednesday => "Wednesday",
            DayOfWeek::Thursday => "Thursday",
            DayOfWeek::Friday => "Friday",
            DayOfWeek::Saturday => "Saturday",
            DayOfWeek::Sunday => "Sunday",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PeriodOfDay {
    Night,
    Morning,
    Afternoon,
    Evening,
}

impl PeriodOfDay {
    pub fn label(&self) -> &'static str {
        match self {
            PeriodOfDay::Night => "Night",
            PeriodOfDay::Morning => "Morning",
            PeriodOfDay::Afternoon => "Afternoon",
            PeriodOfDay::Evening => "Evening",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Month {
    January,
    February,
    March,
    April,
    May,
    June,
    July,
    August,
    September,
    October,
    November,
    December,
}

impl Month {
    const ALL: [Month; 12] = [
        Month::January,
        Month::February,
        Month::March,
        Month::April,
        Month::May,
        Month::June,
        Month::July,
        Month::August,
        Month::September,
        Month::October,
        Month::November,
        Month::December,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            Month::January => "January",
            Month::February => "February",
            Month::March => "March",
            Month::April => "April",
            Month::May => "May",
            Month::June => "June",
            Month::July => "July",
            Month::August => "August",
            Month::September => "September",
            Month::October => "October",
            Month::November => "November",
            Month::December => "December",
        }
    }
}

/// The time-granularity facets attached to an outlier's departure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TimeFacets {
    pub day_of_week: DayOfWeek,
    pub period_of_day: PeriodOfDay,
    pub month: Month,
}

/// Maps an epoch timestamp (seconds, UTC) to its calendar facets.
pub fn enrich(t: i64) -> TimeFacets {
    let days = t.div_euclid(86_400);
    let secs_of_day = t.rem_euclid(86_400);
    // 1970-01-01 was a Thursday, three days past Monday.
    let dow = (days + 3).rem_euclid(7) as usize;
    let hour = secs_of_day / 3_600;
    let period = match hour {
        0..=5 => PeriodOfDay::Night,
        6..=11 => PeriodOfDay::Morning,
        12..=17 => PeriodOfDay::Afternoon,
        _ => PeriodOfDay::Evening,
    };
    let (_, month, _) = civil_from_days(days);
    TimeFacets {
        day_of_week: DayOfWeek::ALL[dow],
        period_of_day: period,
        month: Month::ALL[(month - 1) as usize],
    }
}

/// Proleptic Gregorian date for a day count relative to 1970-01-01.
/// Works on 400-year eras, each spanning 146097 days.
pub(crate) fn civil_from_days(z: i64) -> (i64, u32, u32) {
    let z = z + 719_468;
    let era = z.div_euclid(146_097);
    let doe = z.rem_euclid(146_097);
    let yoe = (doe - doe / 1_460 + doe / 36_524 - doe / 146_096) / 365;
    let year = yoe + era * 400;
    let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    let mp = (5 * doy + 2) / 153;
    let day = (doy - (153 * mp + 2) / 5 + 1) as u32;
    let month = if mp < 10 { mp + 3 } else { mp - 9 } as u32;
    (if month <= 2 { year + 1 } else { year }, month, day)
}

/// Day count relative to 1970-01-01 for a proleptic Gregorian date.
pub(crate) fn days_from_civil(year: i64, month: u32, day: u32) -> i64 {
    let y = if month <= 2 { year - 1 } else { year };
    let era = y.div_euclid(400);
    let yoe = y - era * 400;
    let mp = if month > 2 { month - 3 } else { month + 9 } as i64;
    let doy = (153 * mp + 2) / 5 + day as i64 - 1;
    let doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    era * 146_097 + doe - 719_468
}

pub(crate) fn days_in_month(year: i64, month: u32) -> u32 {
    match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
        4 | 6 | 9 | 11 => 30,
        2 => {
            if (year % 4 == 0 && year % 100 != 0) || year % 400 == 0 {
                29
            } else {
                28
            }
        }
        _ => 0,
    }
}
