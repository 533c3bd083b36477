//-----
//
// File: VehicleClasses.h
//
// Description:
//
// Vehicle-related attribute types, dimension systems, a specification
// system and object frame classes (ignition key, vehicle, car, truck,
// stereo system).
//
//-----

#include <EverydayObjectDefinitions.h>
#include <ValueSetsAndMappings.h>

AttributeType "VehicleExteriorColor"
(
  <SuperType val = "QualityAttributeType"/>

  "Values"
  (
    { "Black": Dictionary
      ( English
        ( { "black", "charcoal" } ); ); ,
      "Blue": Dictionary
      ( English
        ( { "blue" } ); ); ,
      "Silver": Dictionary
      ( English
        ( { "silver", "grey" } ); ); ,
      "White": Dictionary
      ( English
        ( { "white", "opal" } ); );
    }
  );
);

AttributeType "VehiclePhysicalDimensionAttributeTypeX"
(
  <SuperType val = "LocationAttributeType"/>
  <ValueSetName ref = VehiclePhysicalDimension/>
);

AttributeType "VehiclePhysicalDimensionAttributeTypeY"
(
  <SuperType val = "LocationAttributeType"/>
  <ValueSetName ref = VehiclePhysicalDimension/>
);

AttributeType "VehiclePhysicalDimensionAttributeTypeZ"
(
  <SuperType val = "LocationAttributeType"/>
  <ValueSetName ref = VehiclePhysicalDimension/>
);

AttributeType "VehicleComponentMaterialCompositionAttributeType"
(
  <SuperType val = "QualityAttributeType"/>
  <ValueSetName ref = VehicleComponentMaterialComposition/>
);

// A second-based timeline attribute type for vehicle component
// coordinates. (The "Second" value set is in BasicDefinitions.h).
//
AttributeType "SecondBasedTimelineAttributeType"
(
  <SuperType val = "Locational"/>

  "ValueSet"
  (
    <BaseValueSet ref = Second />
    <SuperTypeUsage val = "LocationalValues" />
    <OrderedCollection val = "true" />
    { 1, .. lenMaxTimelineValue }
  );
);

DimensionSystem "VehicleComponentCoordinates"
(
  LocationAttributeTypes
  (
    SpatialAttributeTypes
    (
      VehiclePhysicalDimensionAttributeTypeX;
      VehiclePhysicalDimensionAttributeTypeY;
      VehiclePhysicalDimensionAttributeTypeZ;
    );
    TemporalAttributeTypes
    (
      SecondBasedTimelineAttributeType;
    );
  );
);

SpecificationSystem "VehicleComponentPhysicalComposition"
(
  DimensionSystem "MillimeterCoordinates" (VehicleComponentCoordinates);

  InnerContent
  (
    QualityAttributeTypes
    (
      "EssentialValueType" (VehicleComponentMaterialCompositionAttributeType);
    );
  );
);

ObjectFrameClass "SteelIgnitionKeyObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  DictionaryPriorWord
  (
    English
    (
      { "ignition ", "ignition" }
    );
  );
  Dictionary
  (
    English
    (
      { "key", "keys" }
    );
  );

  StructuralParentClassesBase
  (
    { "EverydayObjectStructuralParentClass" }
  );

  RelationshipToParent
  (
    AtLocations // (location)
    (
      AtLocationSet // placeholders:
      (
        <DimensionSystem ref = VehicleComponentCoordinates />
        <Attribute ref = X-Coordinate val = "nil" />
        <Attribute ref = Y-Coordinate val = "nil" />
        <Attribute ref = Z-Coordinate val = "nil" />
      );
    );

    OuterDimensionSystemExtents // (size)
    (
      OuterDimensionSystemExtentSet // placeholders:
      (
        <DimensionSystem ref = VehicleComponentCoordinates />
        <Attribute ref = X-Coordinate val = "nil" />
        <Attribute ref = Y-Coordinate val = "nil" />
        <Attribute ref = Z-Coordinate val = "nil" />
      );
    );
  );

  AttributeTypes
  (
    AttributeType "MaterialCompositionAttributeType"
    (
      <SuperType val = "QualityAttributeType"/>

      "Values"
      (
        <SuperTypeUsage val = "QualityValues" />

        { "Brass",
          "Steel" }
      );
    );
  );

  Attributes
  (
    // Every instance of this class has this specific attribute:

    Attribute "MaterialComposition"
    (
      <Attribute ref = MaterialCompositionAttributeType val = "Steel" />
    );
  );

  // (not needed here) DimensionSystems ();

  // (not needed here) Structure ();

); // SteelIgnitionKeyObjectFrameClass

ObjectFrameClass "VehicleObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  Dictionary ( English
  (
    { "vehicle",
      "vehicles" }
  ););

  HigherClasses ( { "EverydayObjectFrameClass" } );
);

ObjectFrameClass "CarObjectFrameClass"
(
  Dictionary ( English
    (
      {
        "car",
        "cars",
        "auto",
        "autos",
        "automobile",
        "automobiles"
      }
    );
  );
  HigherClasses ( { "VehicleObjectFrameClass" } );
);

ObjectFrameClass "TruckObjectFrameClass"
(
  Dictionary ( English
    (
      {
        "truck",
        "trucks",
        "pickup",
        "pickups"
      }
    );
  );
  HigherClasses ( { "VehicleObjectFrameClass" } );
);

ObjectFrameClass "StereoSystemObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  DictionaryPriorWord ( English
  (
    {
      "stereo",
      "stereos" // (plural since it is a noun)
    }
  ););

  Dictionary ( English
  (
    {
      "system",
      "systems"
    }
  ););

  HigherClasses ( { "EverydayObjectFrameClass" } );
);
