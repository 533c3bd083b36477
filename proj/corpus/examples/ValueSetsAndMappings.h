//-----
//
// File: ValueSetsAndMappings.h
//
// Description:
//
// Reference value sets and value set mappings: simple declarations,
// renames, set depictions, enumerated sets and unit conversions.
//
//-----

#include <BasicDefinitions.h>

Integer lenMaxVehiclePhysicalDimension = 12000; // vehicle max size in any dimension

ValueSet "VehiclePhysicalDimension"
(
  <BaseValueSet ref = Millimeter /> // the unit of measure

  <SuperTypeUsage val = "Locational" />

  { 1, .. lenMaxVehiclePhysicalDimension }
);

ValueSet "VehicleComponentMaterialComposition"
(
  <SuperTypeUsage val = "Qualitative" />

  // The following are quality values:

  { "Space",
    "SolidUnspecified",
    "Metal",
    "Plastic" }
);

ValueSet "PrimeNumberValueSet"
(
  IntegerConstant
);

// Using a "rename" (a user-defined value set base name):
//
ValueSet "MyPrimeNumberValueSet" (PrimeNumberValueSet);

// Using a base type (built-in constant set name):
//
ValueSet "MyIntegerValueSet"
(
  IntegerConstant
);

// Using a set depiction:
//
ValueSet "MyValueSetName"
(
  <BaseValueSet ref = Millimeter />
  <SuperTypeUsage val = "LocationalValues" />
  { 1, .. 9999 }
);

// Using enumerated values:
//
ValueSet "SimpleTimelineValueSet"
(
  <SuperTypeUsage val = "LocationalValues" />
  <OrderedCollection val = "true" />
  { "T01",
    "T02" }
);

ValueSet "ChemicalCompositionValueSet"
(
  <SuperTypeUsage val = "QualitativeValues" />
  { "Organic",
    "InOrganic" }
);

// Unrestricted word list for a value within a value set:
//
ValueSet "ColorValueSet"
(
  <SuperTypeUsage val = "QualitativeValues" />
  { "ColorBlue" : Dictionary ( English ( { "blue", "turquoise" } ) );
  }
);

ValueSet "Meter"
(
  IntegerConstant
);

ValueSet "Foot"
(
  IntegerConstant
);

Mapping "MeterToFoot"
(
  <Source ref = Meter />
  <Dest ref = Foot />
  <Function expr = (x$ * 3.2808) />
);

Mapping "MillimeterToMeter"
(
  <Source ref = Millimeter />
  <Dest ref = Meter />
  <Function expr = (x$ / 1000) />
);
