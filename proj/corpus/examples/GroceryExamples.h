//-----
//
// File: GroceryExamples.h
//
// Description:
//
// A grocery store class whose checkout lanes form a collection
// (Multiple flag): each set member is defined by its features.
//
//-----

ObjectFrameClass "GroceryStoreObjectFrameClass"
(
  <StructureTrait val = "Compound"/>

  DictionaryPriorWord
  (
    English
    (
      { "grocery ", "grocery" }
    );
  );
  Dictionary
  (
    English
    (
      { "store", "stores" }
    );
  );

  Structure
  (
    ObjectFrameClass "CheckoutLaneObjectFrameClass"
    (
      < StructureTrait val = "Compound"/>
      <Multiple val = "true" />
      <Cardinality val = "nil" /> // placeholder

      RelationshipToParent
      (
        // Detail not shown: this establishes a cuboid region within which all
        // set members (i.e. each checkout lane) are located.
      );

      // Attributes: none here, but attributes can also be used to define features for set members

      Structure
      (
        ObjectFrameClass "LoadingAreaObjectFrameClass"
        (
          // (not shown)
        );
        ObjectFrameClass "CashRegisterObjectFrameClass"
        (
          // (not shown)
        );
      );

      // Behavior: none here, but behaviors can also be used to define features for set members

    ); // ObjectFrameClass "CheckoutLaneObjectFrameClass"

  ); // Structure

); // ObjectFrameClass "GroceryStoreObjectFrameClass"
