//-----
//
// File: TemplateExamples.h
//
// Description:
//
// A template object class that renders ("infuses") the values of all
// unit-sized locations within an animal head object frame instance,
// plus the supporting specification system.
//
//-----

#include <FarmObjects.h>

AttributeType "AnimalComponentMaterialCompositionAttributeType"
(
  <SuperType val = "QualityAttributeType"/>

  "Values"
  (
    { "Space",
      "Fur",
      "Skin",
      "Bone" }
  );
);

DimensionSystem "AnimalComponentMillimeterCoordinates" (PhysicalObjectMillimeterCoordinates);

SpecificationSystem "AnimalComponentPhysicalComposition"
(
  DimensionSystem "MillimeterCoordinates" (AnimalComponentMillimeterCoordinates);

  InnerContent
  (
    QualityAttributeTypes
    (
      "EssentialValueType" (AnimalComponentMaterialCompositionAttributeType);
    );
  );
);

TemplateObjectClass "AnimalHead_Template001"
(
  <StructuralParentClass ref = AnimalObjectFrameClass />
  <ObjectFrameClass ref = AnimalObjectFrameClass.HeadObjectFrameClass />
  <ShapeTemplate val = "false" />

  // TwoPartAttributeCluster:
  <SpecificationSystem ref = AnimalComponentPhysicalComposition />
  <Attribute ref = X-Coordinate var = x$ />
  <Attribute ref = Y-Coordinate var = y$ />
  <Attribute ref = Z-Coordinate var = z$ />
  <Attribute ref = EssentialValueType routine = "RenderAnimalHead" />
  //<Attribute ref = EssentialValueType bitmap = "AnimalHead3D" />

  OuterDimensionSystemExtentSet
  (
    <DimensionSystem ref = AnimalComponentMillimeterCoordinates />
    <Attribute ref = X-Coordinate val = "700" />
    <Attribute ref = Y-Coordinate val = "700" />
    <Attribute ref = Z-Coordinate val = "700" />
  );
);
